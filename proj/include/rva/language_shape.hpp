#pragma once

/**
 * @file language_shape.hpp
 * @brief Does an automaton accept only words with one separator, placed after
 * a multiple of d_seq digit letters?
 */

#include <cstddef>
#include <vector>

#include "rva/automaton.hpp"
#include "rva/verdict.hpp"

namespace rva {

using StateSet = std::vector<bool>;

/// States with an empty language: complement of the backward closure of the
/// accepting recurrent states.
inline StateSet empty_states(const Automaton& aut, const Predecessors& pred, const SccInfo& info) {
  StateSet potentially_empty(aut.size(), true);
  std::vector<StateId> to_process;
  for (StateId q = 0; q < aut.size(); ++q) {
    if (info.recurrent(q) && aut.accepting(q)) {
      potentially_empty[q] = false;
      to_process.push_back(q);
    }
  }
  while (!to_process.empty()) {
    const StateId q = to_process.back();
    to_process.pop_back();
    for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
      for (StateId p : pred.of(q, a)) {
        if (potentially_empty[p]) {
          potentially_empty[p] = false;
          to_process.push_back(p);
        }
      }
    }
  }
  return potentially_empty;
}

inline StateSet empty_states(const Automaton& aut) { return empty_states(aut, predecessors(aut), sccs(aut)); }

/// Q_mod_i: states reached from the initial state by a number of digit
/// letters congruent to i mod d_seq. `visits` counts processed (state, class) pairs.
inline std::vector<StateSet> mod_states(const Automaton& aut, std::size_t d_seq, std::size_t* visits = nullptr) {
  std::vector<StateSet> mods(d_seq, StateSet(aut.size(), false));
  std::vector<std::pair<StateId, std::size_t>> to_process{{aut.initial(), 0}};
  mods[0][aut.initial()] = true;
  std::size_t count = 0;
  const LetterIndex star = aut.alphabet().star_index();
  while (!to_process.empty()) {
    const auto [q, i] = to_process.back();
    to_process.pop_back();
    ++count;
    const std::size_t next = (i + 1) % d_seq;
    for (LetterIndex a = 0; a < star; ++a) {
      const StateId t = aut.step(q, a);
      if (!mods[next][t]) {
        mods[next][t] = true;
        to_process.push_back({t, next});
      }
    }
  }
  if (visits) *visits = count;
  return mods;
}

/// Q_fra: closure under digit letters of the star-successors of the Q_mod states.
inline StateSet fra_states(const Automaton& aut, const std::vector<StateSet>& mods, std::size_t* visits = nullptr) {
  StateSet fra(aut.size(), false);
  std::vector<StateId> to_process;
  const LetterIndex star = aut.alphabet().star_index();
  for (const auto& m : mods) {
    for (StateId q = 0; q < aut.size(); ++q) {
      if (m[q] && !fra[aut.step(q, star)]) {
        fra[aut.step(q, star)] = true;
        to_process.push_back(aut.step(q, star));
      }
    }
  }
  std::size_t count = 0;
  while (!to_process.empty()) {
    const StateId q = to_process.back();
    to_process.pop_back();
    ++count;
    for (LetterIndex a = 0; a < star; ++a) {
      const StateId t = aut.step(q, a);
      if (!fra[t]) {
        fra[t] = true;
        to_process.push_back(t);
      }
    }
  }
  if (visits) *visits = count;
  return fra;
}

struct ShapeSets {
  StateSet empty;
  std::vector<StateSet> mod;
  StateSet fra;

  /// Union of the Q_mod sets.
  StateSet natural() const {
    StateSet out(empty.size(), false);
    for (const auto& m : mod) {
      for (std::size_t q = 0; q < m.size(); ++q) out[q] = out[q] || m[q];
    }
    return out;
  }
};

inline ShapeSets shape_sets(const Automaton& aut, std::size_t d_seq) {
  ShapeSets sets;
  sets.empty = empty_states(aut);
  sets.mod = mod_states(aut, d_seq);
  sets.fra = fra_states(aut, sets.mod);
  return sets;
}

/// Some star-free word is accepted iff the digit-only subgraph restricted to
/// the natural-part states has a cycle through an accepting state. Returns
/// such a state, or nullopt.
inline std::optional<StateId> star_free_acceptance(const Automaton& aut, const StateSet& natural) {
  const LetterIndex star = aut.alphabet().star_index();
  std::size_t count = 0;
  const auto comp = tarjan(
      aut.size(),
      [&](std::size_t q) { return natural[q] ? std::size_t{star} : std::size_t{0}; },
      [&](std::size_t q, std::size_t a) { return aut.step(static_cast<StateId>(q), static_cast<LetterIndex>(a)); },
      count);
  std::vector<std::size_t> size(count, 0);
  std::vector<bool> self_loop(count, false), has_acc(count, false);
  for (StateId q = 0; q < aut.size(); ++q) {
    if (!natural[q]) continue;
    ++size[comp[q]];
    if (aut.accepting(q)) has_acc[comp[q]] = true;
    for (LetterIndex a = 0; a < star; ++a) {
      if (aut.step(q, a) == q) self_loop[comp[q]] = true;
    }
  }
  for (StateId q = 0; q < aut.size(); ++q) {
    const std::size_t c = comp[q];
    if (natural[q] && aut.accepting(q) && (size[c] > 1 || self_loop[c])) return q;
  }
  return std::nullopt;
}

/// Accepts only words of (digit^{d_seq})^* * digit^omega (digits of width d_par).
inline Verdict check_shape(const Automaton& aut, std::size_t d_seq) {
  const ShapeSets sets = shape_sets(aut, d_seq);
  const LetterIndex star = aut.alphabet().star_index();
  auto live_star = [&](StateId q) { return !sets.empty[aut.step(q, star)]; };
  for (StateId q = 0; q < aut.size(); ++q) {
    if (sets.fra[q] && live_star(q)) return Verdict::no(witness::NotShape{q, "second separator accepted"}, aut.size());
  }
  for (std::size_t i = 1; i < d_seq; ++i) {
    for (StateId q = 0; q < aut.size(); ++q) {
      if (sets.mod[i][q] && live_star(q)) {
        return Verdict::no(witness::NotShape{q, "separator accepted after a misaligned number of digits"}, aut.size());
      }
    }
  }
  if (auto q = star_free_acceptance(aut, sets.natural())) {
    return Verdict::no(witness::NotShape{*q, "word without separator accepted"}, aut.size());
  }
  return Verdict::yes(aut.size());
}

inline Verdict is_d_parallel(const Automaton& aut) { return check_shape(aut, 1); }

inline Verdict is_d_sequential(const Automaton& aut) {
  return check_shape(aut, static_cast<std::size_t>(aut.alphabet().dim()));
}

/// Sequential-shape probe with an explicit block length.
inline Verdict is_d_sequential(const Automaton& aut, std::size_t d) { return check_shape(aut, d); }

}  // namespace rva
