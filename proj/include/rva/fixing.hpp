#pragma once

/**
 * @file fixing.hpp
 * @brief Component fixing on automata, and the parallel view of a sequential
 * automaton.
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rva/automaton.hpp"

namespace rva {

/// Records which transformation produced an automaton.
struct FixedAutomaton {
  Automaton automaton;
  int component = 0;
  int digit = 0;
};

/// Same states; a □-letter reads like the source letter with component f set
/// to z; ⋆ unchanged.
inline FixedAutomaton fix_parallel(const Automaton& aut, int f, int z) {
  const AlphabetSpec& src = aut.alphabet();
  if (src.kind() != EncodingKind::parallel) throw std::invalid_argument("fix_parallel: alphabet is not parallel");
  if (f < 0 || f >= src.dim()) throw std::invalid_argument("fix_parallel: component out of range");
  if (src.is_fixed(f)) throw std::invalid_argument("fix_parallel: component already fixed");
  if (z < 0 || z >= src.base()) throw std::invalid_argument("fix_parallel: digit out of range");
  std::vector<int> fixed = src.fixed();
  fixed.push_back(f);
  AlphabetSpec alphabet(src.base(), src.dim(), EncodingKind::parallel, fixed);
  // Letter translation table.
  std::vector<LetterIndex> to_source(alphabet.size());
  for (LetterIndex a = 0; a < alphabet.size(); ++a) {
    Letter letter = alphabet.letter_at(a);
    if (!letter.star) letter.symbols[static_cast<std::size_t>(f)] = z;
    to_source[a] = src.index_of(letter);
  }
  const std::size_t k = alphabet.size();
  std::vector<StateId> delta(aut.size() * k);
  for (StateId q = 0; q < aut.size(); ++q) {
    for (LetterIndex a = 0; a < k; ++a) delta[q * k + a] = aut.step(q, to_source[a]);
  }
  return {Automaton(alphabet, aut.size(), aut.initial(), aut.accepting_mask(), std::move(delta)), f, z};
}

/// States (q, i) at index q*d + i, plus a fresh rejecting sink at n*d. Digits
/// advance the class counter below d-1; at class d-1 only □ is enabled and it
/// reads z; ⋆ keeps the class.
inline FixedAutomaton fix_sequential(const Automaton& aut, int z) {
  const AlphabetSpec& src = aut.alphabet();
  if (src.kind() != EncodingKind::sequential) throw std::invalid_argument("fix_sequential: alphabet is not sequential");
  if (!src.fixed().empty()) throw std::invalid_argument("fix_sequential: alphabet already fixed");
  if (z < 0 || z >= src.base()) throw std::invalid_argument("fix_sequential: digit out of range");
  const int d = src.dim();
  const int b = src.base();
  AlphabetSpec alphabet(b, d, EncodingKind::sequential, {d - 1});
  const std::size_t k = alphabet.size();
  const std::size_t n = aut.size() * static_cast<std::size_t>(d) + 1;
  const auto sink = static_cast<StateId>(n - 1);
  const auto box = static_cast<LetterIndex>(b);
  const LetterIndex star = alphabet.star_index();
  auto id = [d](StateId q, int i) { return static_cast<StateId>(q * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)); };
  std::vector<StateId> delta(n * k, sink);
  std::vector<bool> accepting(n, false);
  for (StateId q = 0; q < aut.size(); ++q) {
    for (int i = 0; i < d; ++i) {
      const StateId s = id(q, i);
      accepting[s] = aut.accepting(q);
      delta[s * k + star] = id(aut.step(q, src.star_index()), i);
      if (i < d - 1) {
        for (int a = 0; a < b; ++a) delta[s * k + static_cast<std::size_t>(a)] = id(aut.step(q, static_cast<LetterIndex>(a)), i + 1);
      } else {
        delta[s * k + box] = id(aut.step(q, static_cast<LetterIndex>(z)), 0);
      }
    }
  }
  return {Automaton(alphabet, n, id(aut.initial(), 0), std::move(accepting), std::move(delta)), d - 1, z};
}

/// Parallel automaton reading one d-block of a sequential automaton per
/// letter: the run on a parallel word visits the block-boundary states of the
/// sequential run. Acceptance is carried by the source SCC, so for a weak
/// source the languages correspond exactly under parallelization of words.
inline Automaton parallel_view(const Automaton& aut) {
  const AlphabetSpec& src = aut.alphabet();
  if (src.kind() != EncodingKind::sequential) throw std::invalid_argument("parallel_view: alphabet is not sequential");
  if (!src.fixed().empty()) throw std::invalid_argument("parallel_view: fixed alphabet");
  if (!is_weak(aut)) throw std::invalid_argument("parallel_view: automaton is not weak");
  AlphabetSpec alphabet(src.base(), src.dim(), EncodingKind::parallel);
  const std::size_t k = alphabet.size();
  const auto b = static_cast<std::size_t>(src.base());
  const SccInfo info = sccs(aut);
  std::vector<StateId> delta(aut.size() * k);
  std::vector<bool> accepting(aut.size());
  for (StateId q = 0; q < aut.size(); ++q) {
    accepting[q] = info.accepting_recurrent(q);
    for (LetterIndex a = 0; a + 1 < k; ++a) {
      // Component 0 is the most significant digit of the index.
      std::vector<LetterIndex> digits(static_cast<std::size_t>(src.dim()));
      std::size_t rest = a;
      for (std::size_t i = digits.size(); i-- > 0;) {
        digits[i] = static_cast<LetterIndex>(rest % b);
        rest /= b;
      }
      delta[q * k + a] = run_prefix(aut, q, std::span<const LetterIndex>(digits));
    }
    delta[q * k + alphabet.star_index()] = aut.step(q, src.star_index());
  }
  return Automaton(alphabet, aut.size(), aut.initial(), std::move(accepting), std::move(delta));
}

}  // namespace rva
