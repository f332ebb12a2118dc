#pragma once

/**
 * @file generators.hpp
 * @brief Known saturated automata families and seeded random corpora.
 */

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rva/automaton.hpp"

namespace rva {

enum class KnownKind { full_space, zero_only, unit_box, complement_full };

inline KnownKind parse_known_kind(const std::string& text) {
  if (text == "full-space") return KnownKind::full_space;
  if (text == "zero-only") return KnownKind::zero_only;
  if (text == "unit-box") return KnownKind::unit_box;
  if (text == "complement-full") return KnownKind::complement_full;
  throw std::invalid_argument("unknown automaton kind '" + text + "'");
}

inline std::string to_string(KnownKind kind) {
  switch (kind) {
    case KnownKind::full_space:
      return "full-space";
    case KnownKind::zero_only:
      return "zero-only";
    case KnownKind::unit_box:
      return "unit-box";
    case KnownKind::complement_full:
      return "complement-full";
  }
  return "?";
}

namespace detail {

/// Natural part: `chain` states q_0..q_{c-1} where digit letters advance
/// q_i to q_{i+1 mod c} if `allowed(i, digit)`; ⋆ from q_0 goes to an
/// accepting tail that loops on letters satisfying `tail_allowed`.
template <class Allowed, class TailAllowed>
Automaton chain_automaton(const AlphabetSpec& al, std::size_t chain, Allowed allowed, TailAllowed tail_allowed) {
  AutomatonBuilder b(al, 0);
  for (std::size_t i = 0; i < chain + 2; ++i) b.add_state();
  const auto tail = static_cast<StateId>(chain);
  const auto sink = static_cast<StateId>(chain + 1);
  const LetterIndex star = al.star_index();
  for (StateId q = 0; q < chain; ++q) {
    for (LetterIndex a = 0; a < star; ++a) b.set(q, a, allowed(q, a) ? static_cast<StateId>((q + 1) % chain) : sink);
    b.set(q, star, q == 0 ? tail : sink);
  }
  for (LetterIndex a = 0; a < star; ++a) b.set(tail, a, tail_allowed(a) ? tail : sink);
  b.set(tail, star, sink);
  b.fill(sink, sink);
  b.set_initial(0);
  b.set_accepting(tail);
  return b.build();
}

}  // namespace detail

/**
 * Automata for saturated languages:
 * - full-space: all of [0,∞)^d (3 states parallel, d+2 sequential);
 * - zero-only: the encodings of the zero vector;
 * - unit-box: [0,1]^d, i.e. natural part 0* or 0*1 per component, a
 *   component ending in 1 being followed by 0^ω;
 * - complement-full: all of R^d in b-complement (parallel only).
 */
inline Automaton gen_known_rva(KnownKind kind, int base, int dim, EncodingKind encoding) {
  const AlphabetSpec al(base, dim, encoding);
  const bool seq = encoding == EncodingKind::sequential;
  const std::size_t chain = seq ? static_cast<std::size_t>(dim) : 1;
  const LetterIndex star = al.star_index();
  switch (kind) {
    case KnownKind::full_space:
      return detail::chain_automaton(al, chain, [](StateId, LetterIndex) { return true; },
                                     [](LetterIndex) { return true; });
    case KnownKind::zero_only: {
      const LetterIndex zero = seq ? 0 : al.uniform_letter(0);
      return detail::chain_automaton(al, chain, [zero](StateId, LetterIndex a) { return a == zero; },
                                     [zero](LetterIndex a) { return a == zero; });
    }
    case KnownKind::complement_full: {
      if (seq) throw std::invalid_argument("gen_known_rva: complement-full is parallel only");
      AutomatonBuilder b(al, 0);
      const StateId q0 = b.add_state(), nat = b.add_state(), frac = b.add_state(), sink = b.add_state();
      for (LetterIndex a = 0; a < star; ++a) {
        bool sign = true;
        for (int s : al.letter_at(a).symbols) sign = sign && (s == 0 || s == base - 1);
        b.set(q0, a, sign ? nat : sink);
        b.set(nat, a, nat);
        b.set(frac, a, frac);
      }
      b.set(q0, star, sink);
      b.set(nat, star, frac);
      b.set(frac, star, sink);
      b.fill(sink, sink);
      b.set_initial(q0);
      b.set_accepting(frac);
      return b.build();
    }
    case KnownKind::unit_box:
      break;
  }
  // unit-box. Natural states carry the set S of components whose natural
  // part ended in 1; fractional states carry the set T of components forced
  // to 0. Sequential states additionally carry the position in the block.
  const std::size_t subsets = std::size_t{1} << dim;
  const std::size_t nat = chain * subsets;
  AutomatonBuilder b(al, 0);
  for (std::size_t i = 0; i < 2 * nat + 1; ++i) b.add_state();
  const auto sink = static_cast<StateId>(2 * nat);
  auto nat_id = [&](std::size_t cls, std::size_t s) { return static_cast<StateId>(cls * subsets + s); };
  auto frac_id = [&](std::size_t cls, std::size_t t) { return static_cast<StateId>(nat + cls * subsets + t); };
  for (std::size_t cls = 0; cls < chain; ++cls) {
    const std::size_t next = (cls + 1) % chain;
    for (std::size_t s = 0; s < subsets; ++s) {
      const StateId q = nat_id(cls, s);
      const StateId f = frac_id(cls, s);
      b.set(f, star, sink);
      b.set(q, star, cls == 0 ? frac_id(0, s) : sink);
      for (LetterIndex a = 0; a < star; ++a) {
        const std::vector<int> sym = al.letter_at(a).symbols;
        // Natural part.
        if (cls == 0 && s != 0) {
          b.set(q, a, sink);
        } else {
          std::size_t grown = s;
          bool ok = true;
          for (std::size_t i = 0; i < sym.size(); ++i) {
            const std::size_t comp = seq ? cls : i;
            if (sym[i] == 1) grown |= std::size_t{1} << comp;
            ok = ok && sym[i] <= 1;
          }
          b.set(q, a, ok ? nat_id(next, grown) : sink);
        }
        // Fractional part.
        bool ok = true;
        for (std::size_t i = 0; i < sym.size(); ++i) {
          const std::size_t comp = seq ? cls : i;
          if ((s >> comp) & 1) ok = ok && sym[i] == 0;
        }
        b.set(f, a, ok ? frac_id(next, s) : sink);
      }
      b.set_accepting(f);
    }
  }
  b.fill(sink, sink);
  b.set_initial(nat_id(0, 0));
  return b.build();
}

namespace detail {

/// Acceptance chosen per SCC: recurrent SCCs get a random bit, transient
/// states copy it too (harmless for the language).
inline Automaton with_scc_acceptance(const Automaton& aut, std::mt19937_64& rng) {
  const SccInfo info = sccs(aut);
  std::vector<bool> scc_acc(info.count());
  for (std::size_t c = 0; c < info.count(); ++c) scc_acc[c] = (rng() & 1) != 0;
  std::vector<bool> acc(aut.size());
  for (StateId q = 0; q < aut.size(); ++q) acc[q] = scc_acc[info.scc_of[q]];
  return Automaton(aut.alphabet(), aut.size(), aut.initial(), std::move(acc), aut.table());
}

}  // namespace detail

/// Seeded random total automaton with per-SCC acceptance (weak by construction).
inline Automaton gen_random_weak(std::size_t n, int base, int dim, EncodingKind encoding, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random_weak: n must be >= 1");
  const AlphabetSpec al(base, dim, encoding);
  std::mt19937_64 rng(seed);
  std::vector<StateId> delta(n * al.size());
  for (auto& t : delta) t = static_cast<StateId>(rng() % n);
  Automaton raw(al, n, 0, std::vector<bool>(n, false), std::move(delta));
  return detail::with_scc_acceptance(raw, rng);
}

/**
 * Seeded random automaton that respects the encoding shape: natural states
 * (with a block position for sequential encodings) never accept, ⋆ from a
 * block boundary enters fractional states, every other ⋆ goes to a sink.
 * The initial state loops on the zero letter (block) with probability 1/2.
 * Requires n >= 3.
 */
inline Automaton gen_random_shaped(std::size_t n, int base, int dim, EncodingKind encoding, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_random_shaped: n must be >= 3");
  const AlphabetSpec al(base, dim, encoding);
  const bool seq = encoding == EncodingKind::sequential;
  const std::size_t d = seq ? static_cast<std::size_t>(dim) : 1;
  std::mt19937_64 rng(seed);
  // Natural states 0..nat-1 (class = id mod d), fractional nat..n-2, sink n-1.
  std::size_t nat = 1 + rng() % (n - 2);
  if (nat < d) nat = std::min(d, n - 2);
  const std::size_t frac = n - 1 - nat;
  const auto sink = static_cast<StateId>(n - 1);
  const LetterIndex star = al.star_index();
  AutomatonBuilder b(al, 0);
  for (std::size_t i = 0; i < n; ++i) b.add_state();
  auto pick_nat_of_class = [&](std::size_t cls) -> StateId {
    std::vector<StateId> options;
    for (std::size_t q = cls; q < nat; q += d) options.push_back(static_cast<StateId>(q));
    if (options.empty() || rng() % 8 == 0) return sink;
    return options[rng() % options.size()];
  };
  auto pick_frac = [&]() -> StateId {
    if (frac == 0 || rng() % 6 == 0) return sink;
    return static_cast<StateId>(nat + rng() % frac);
  };
  for (StateId q = 0; q < nat; ++q) {
    const std::size_t next = (q % d + 1) % d;
    for (LetterIndex a = 0; a < star; ++a) b.set(q, a, pick_nat_of_class(next));
    b.set(q, star, q % d == 0 ? pick_frac() : sink);
  }
  for (StateId q = static_cast<StateId>(nat); q < nat + frac; ++q) {
    for (LetterIndex a = 0; a < star; ++a) b.set(q, a, pick_frac());
    b.set(q, star, sink);
  }
  b.fill(sink, sink);
  if (!seq && rng() % 2 == 0) b.set(0, al.uniform_letter(0), 0);
  if (seq && d == 1 && rng() % 2 == 0) b.set(0, 0, 0);
  b.set_initial(0);
  const Automaton raw = b.build();
  // Fractional SCCs get random acceptance; everything else rejects.
  const SccInfo info = sccs(raw);
  std::vector<bool> scc_acc(info.count());
  for (std::size_t c = 0; c < info.count(); ++c) scc_acc[c] = (rng() & 1) != 0;
  std::vector<bool> acc(n, false);
  for (StateId q = static_cast<StateId>(nat); q < nat + frac; ++q) acc[q] = scc_acc[info.scc_of[q]];
  // Keep weakness: an SCC is either all fractional or all natural/sink.
  return Automaton(al, n, 0, std::move(acc), raw.table());
}

/// Redirects one random transition and re-draws acceptance of one SCC,
/// keeping the result weak.
inline Automaton mutate(const Automaton& aut, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<StateId> delta = aut.table();
  delta[rng() % delta.size()] = static_cast<StateId>(rng() % aut.size());
  Automaton moved(aut.alphabet(), aut.size(), aut.initial(), aut.accepting_mask(), std::move(delta));
  const SccInfo info = sccs(moved);
  std::vector<bool> scc_acc(info.count(), false);
  for (StateId q = 0; q < moved.size(); ++q) scc_acc[info.scc_of[q]] = scc_acc[info.scc_of[q]] || moved.accepting(q);
  if (rng() % 2 == 0) {
    const std::size_t c = rng() % info.count();
    scc_acc[c] = !scc_acc[c];
  }
  std::vector<bool> acc(moved.size());
  for (StateId q = 0; q < moved.size(); ++q) acc[q] = scc_acc[info.scc_of[q]];
  return Automaton(moved.alphabet(), moved.size(), moved.initial(), std::move(acc), moved.table());
}

/**
 * Saturated one-dimensional automaton over base 2 for the union of the
 * intervals [k, k+1] with k ≡ 0 (mod m), m odd >= 3. Natural states are
 * residues r -> 2r + a (mod m); ⋆ from r = 0 accepts any fraction, from
 * r = m-1 only 1^ω, from r = 1 only 0^ω. m + 4 states.
 */
inline Automaton gen_residue_rva(std::size_t m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("gen_residue_rva: m must be odd and >= 3");
  const AlphabetSpec al(2, 1, EncodingKind::parallel);
  const auto all = static_cast<StateId>(m), ones = static_cast<StateId>(m + 1), zeros = static_cast<StateId>(m + 2),
             sink = static_cast<StateId>(m + 3);
  std::vector<StateId> delta((m + 4) * 3, sink);
  std::vector<bool> acc(m + 4, false);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t a = 0; a < 2; ++a) delta[r * 3 + a] = static_cast<StateId>((2 * r + a) % m);
    delta[r * 3 + 2] = r == 0 ? all : r == m - 1 ? ones : r == 1 ? zeros : sink;
  }
  delta[all * 3 + 0] = delta[all * 3 + 1] = all;
  delta[ones * 3 + 1] = ones;
  delta[zeros * 3 + 0] = zeros;
  acc[all] = acc[ones] = acc[zeros] = true;
  return Automaton(al, m + 4, 0, std::move(acc), std::move(delta));
}

/// Residue automaton with about n states (m = largest odd value <= n - 4).
inline Automaton gen_scaling_rva(std::size_t n) {
  std::size_t m = n - 4;
  if (m % 2 == 0) --m;
  return gen_residue_rva(m);
}

}  // namespace rva
