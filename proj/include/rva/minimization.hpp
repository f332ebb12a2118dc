#pragma once

/**
 * @file minimization.hpp
 * @brief Minimization of weak deterministic Büchi automata.
 *
 * Each state gets a colour such that colours never decrease along a run and a
 * run is accepting iff its eventual colour is even. Colours are chosen as
 * large as possible, processing SCCs from the bottom of the SCC DAG upwards,
 * so that language-equivalent states become Moore-equivalent; Hopcroft
 * refinement on the coloured automaton then yields the language classes.
 */

#include <algorithm>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <vector>

#include "rva/automaton.hpp"
#include "rva/partition.hpp"

namespace rva {

/// Maximal weak-parity colouring; requires a weak automaton.
inline std::vector<std::size_t> weak_colouring(const Automaton& aut, const SccInfo& info) {
  const std::size_t top = 2 * aut.size() + 2;
  std::vector<std::size_t> scc_colour(info.count(), top);
  // Tarjan emission order lists successor SCCs first.
  for (std::size_t c = 0; c < info.count(); ++c) {
    std::size_t bound = top;
    for (StateId q : info.members[c]) {
      for (StateId t : aut.row(q)) {
        if (info.scc_of[t] != c) bound = std::min(bound, scc_colour[info.scc_of[t]]);
      }
    }
    switch (info.kind[c]) {
      case SccKind::transient:
        scc_colour[c] = bound;
        break;
      case SccKind::accepting_recurrent:
        scc_colour[c] = bound % 2 == 0 ? bound : bound - 1;
        break;
      case SccKind::rejecting_recurrent:
        scc_colour[c] = bound % 2 == 1 ? bound : bound - 1;
        break;
      case SccKind::mixed:
        throw std::invalid_argument("minimize: automaton is not weak");
    }
  }
  std::vector<std::size_t> colour(aut.size());
  for (StateId q = 0; q < aut.size(); ++q) colour[q] = scc_colour[info.scc_of[q]];
  return colour;
}

/// Language class of every state (equal ids iff equal languages). Works on
/// any weak automaton, accessible or not.
inline std::vector<std::size_t> language_classes(const Automaton& aut, const SccInfo& info) {
  return refine_partition(aut.size(), aut.letter_count(), aut.table(), weak_colouring(aut, info));
}

inline std::vector<std::size_t> language_classes(const Automaton& aut) { return language_classes(aut, sccs(aut)); }

struct Morphism {
  Automaton source;
  Automaton target;
  /// Source state -> target state.
  std::vector<StateId> map;

  /// Source states grouped by target state.
  std::vector<std::vector<StateId>> classes() const {
    std::vector<std::vector<StateId>> out(target.size());
    for (StateId q = 0; q < map.size(); ++q) out[map[q]].push_back(q);
    return out;
  }
};

/// Quotient of an automaton by a language partition. Target states are
/// numbered in BFS discovery order from the initial state.
inline Morphism quotient(const Automaton& aut, const std::vector<std::size_t>& classes, const SccInfo& src_info) {
  const std::size_t k = aut.letter_count();
  constexpr StateId kNone = static_cast<StateId>(-1);
  const std::size_t blocks = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1;
  std::vector<StateId> block_to_target(blocks, kNone);
  std::vector<StateId> representative;
  std::queue<StateId> todo;
  auto discover = [&](StateId q) {
    StateId& slot = block_to_target[classes[q]];
    if (slot == kNone) {
      slot = static_cast<StateId>(representative.size());
      representative.push_back(q);
      todo.push(q);
    }
    return slot;
  };
  discover(aut.initial());
  while (!todo.empty()) {
    const StateId q = todo.front();
    todo.pop();
    for (StateId t : aut.row(q)) discover(t);
  }
  if (representative.size() != blocks) {
    throw std::invalid_argument("minimize: some states are not accessible from the initial state");
  }
  std::vector<bool> accepting(blocks);
  std::vector<StateId> delta(blocks * k);
  for (StateId t = 0; t < blocks; ++t) {
    for (LetterIndex a = 0; a < k; ++a) delta[t * k + a] = block_to_target[classes[aut.step(representative[t], a)]];
  }
  // Acceptance: a target state is accepting iff it lies on an accepting cycle,
  // i.e. its class contains an accepting recurrent source state. Transient
  // targets take the value of any member (it does not affect the language).
  std::vector<bool> has_acc(blocks, false), has_rec(blocks, false);
  for (StateId q = 0; q < aut.size(); ++q) {
    if (src_info.recurrent(q)) {
      has_rec[classes[q]] = true;
      if (aut.accepting(q)) has_acc[classes[q]] = true;
    }
  }
  for (std::size_t b = 0; b < blocks; ++b) {
    accepting[block_to_target[b]] = has_rec[b] ? has_acc[b] : false;
  }
  std::vector<StateId> map(aut.size());
  for (StateId q = 0; q < aut.size(); ++q) map[q] = block_to_target[classes[q]];
  Automaton target(aut.alphabet(), blocks, 0, std::move(accepting), std::move(delta));
  // A target SCC may join transient and recurrent classes; make acceptance uniform per SCC.
  const SccInfo tinfo = sccs(target);
  std::vector<bool> fixed_acc(target.size());
  for (const auto& members : tinfo.members) {
    bool acc = false;
    for (StateId t : members) acc = acc || target.accepting(t);
    for (StateId t : members) fixed_acc[t] = acc && tinfo.recurrent(t);
  }
  return {aut, Automaton(aut.alphabet(), target.size(), 0, std::move(fixed_acc), target.table()), std::move(map)};
}

inline Morphism quotient(const Automaton& aut, const std::vector<std::size_t>& classes) {
  return quotient(aut, classes, sccs(aut));
}

/// Minimal weak automaton and the morphism onto it. Requires every state to be
/// accessible (see trim_accessible).
inline Morphism minimize_weak(const Automaton& aut) {
  const SccInfo info = sccs(aut);
  return quotient(aut, language_classes(aut, info), info);
}

/// Joint morphism over several automata sharing one alphabet: answers
/// state-language equality across automata in constant time.
class EquivalenceTable {
 public:
  EquivalenceTable(std::vector<std::size_t> offsets, std::vector<std::size_t> classes)
      : offsets_(std::move(offsets)), classes_(std::move(classes)) {}

  std::size_t class_of(std::size_t automaton, StateId q) const { return classes_.at(offsets_.at(automaton) + q); }
  bool equivalent(std::size_t a, StateId q, std::size_t b, StateId p) const { return class_of(a, q) == class_of(b, p); }
  std::size_t class_count() const {
    return classes_.empty() ? 0 : *std::max_element(classes_.begin(), classes_.end()) + 1;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> classes_;
};

/// Disjoint union of the inputs. With `fresh_initial`, a new initial state is
/// added: letter i leads to the initial state of automaton min(i, count-1);
/// letter 0 therefore routes to the first automaton.
inline Automaton disjoint_union(const std::vector<const Automaton*>& auts, bool fresh_initial,
                                std::vector<std::size_t>& offsets) {
  if (auts.empty()) throw std::invalid_argument("joint_equivalence: no automata");
  const AlphabetSpec& alphabet = auts.front()->alphabet();
  offsets.clear();
  std::size_t total = fresh_initial ? 1 : 0;
  for (const Automaton* a : auts) {
    if (!(a->alphabet() == alphabet)) throw std::invalid_argument("joint_equivalence: alphabet mismatch");
    offsets.push_back(total);
    total += a->size();
  }
  const std::size_t k = alphabet.size();
  std::vector<bool> accepting(total, false);
  std::vector<StateId> delta(total * k);
  for (std::size_t i = 0; i < auts.size(); ++i) {
    const Automaton& a = *auts[i];
    for (StateId q = 0; q < a.size(); ++q) {
      const std::size_t at = offsets[i] + q;
      accepting[at] = a.accepting(q);
      for (LetterIndex l = 0; l < k; ++l) delta[at * k + l] = static_cast<StateId>(offsets[i] + a.step(q, l));
    }
  }
  if (fresh_initial) {
    for (LetterIndex l = 0; l < k; ++l) {
      const std::size_t i = std::min<std::size_t>(l, auts.size() - 1);
      delta[l] = static_cast<StateId>(offsets[i] + auts[i]->initial());
    }
  }
  return Automaton(alphabet, total, 0, std::move(accepting), std::move(delta));
}

inline EquivalenceTable joint_equivalence(const std::vector<const Automaton*>& auts, bool fresh_initial = true) {
  std::vector<std::size_t> offsets;
  const Automaton joint = disjoint_union(auts, fresh_initial, offsets);
  const SccInfo info = sccs(joint);
  for (SccKind kind : info.kind) {
    if (kind == SccKind::mixed) throw std::invalid_argument("joint_equivalence: automaton is not weak");
  }
  return EquivalenceTable(std::move(offsets), language_classes(joint, info));
}

inline EquivalenceTable joint_equivalence(const std::vector<Automaton>& auts, bool fresh_initial = true) {
  std::vector<const Automaton*> ptrs;
  for (const auto& a : auts) ptrs.push_back(&a);
  return joint_equivalence(ptrs, fresh_initial);
}

}  // namespace rva
