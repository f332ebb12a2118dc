#pragma once

/**
 * @file oracle.hpp
 * @brief Word-level ground truth for saturation, independent of minimization,
 * fixing and the characterizations used by the checks.
 *
 * A language of encodings is saturated iff it has the right shape and is
 * closed under the elementary moves relating encodings of one value: adding a
 * leading zero block, and replacing u a (b-1)^ω by u (a+1) 0^ω in a single
 * component. Each move is searched exactly in a product graph; a difference
 * exists iff a reachable product SCC has a cycle on which the two copies
 * disagree on acceptance. Every counterexample is re-verified on words.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rva/encoding.hpp"
#include "rva/fixing.hpp"
#include "rva/rva_check.hpp"

namespace rva {

struct ProductEdge {
  std::size_t target;
  LetterIndex first;
  LetterIndex second;
};

/// Lasso over letter pairs (first copy, second copy).
struct PairLasso {
  std::vector<std::pair<LetterIndex, LetterIndex>> prefix;
  std::vector<std::pair<LetterIndex, LetterIndex>> period;

  std::vector<LetterIndex> first_prefix() const { return project(prefix, true); }
  std::vector<LetterIndex> first_period() const { return project(period, true); }
  std::vector<LetterIndex> second_prefix() const { return project(prefix, false); }
  std::vector<LetterIndex> second_period() const { return project(period, false); }

 private:
  static std::vector<LetterIndex> project(const std::vector<std::pair<LetterIndex, LetterIndex>>& w, bool first) {
    std::vector<LetterIndex> out;
    for (const auto& [a, b] : w) out.push_back(first ? a : b);
    return out;
  }
};

/// Searches the graph reachable from `start` for a node lying on a cycle and
/// satisfying `bad`, which must be constant on SCCs. Returns the shortest path
/// to the first such node in BFS order followed by a shortest cycle through it.
template <class Successors, class Bad>
std::optional<PairLasso> find_bad_lasso(std::size_t nodes, std::size_t start, Successors&& succ, Bad&& bad) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  struct Parent {
    std::size_t node = kNone;
    LetterIndex first = 0, second = 0;
  };
  std::vector<Parent> parent(nodes);
  std::vector<bool> seen(nodes, false);
  std::vector<std::size_t> order;
  std::queue<std::size_t> todo;
  seen[start] = true;
  todo.push(start);
  while (!todo.empty()) {
    const std::size_t v = todo.front();
    todo.pop();
    order.push_back(v);
    for (const ProductEdge& e : succ(v)) {
      if (!seen[e.target]) {
        seen[e.target] = true;
        parent[e.target] = {v, e.first, e.second};
        todo.push(e.target);
      }
    }
  }
  // Adjacency of the reachable part; node v owns adj[begin[v], end[v]).
  std::vector<std::size_t> begin(nodes, 0), end(nodes, 0), adj;
  for (std::size_t v : order) {
    begin[v] = adj.size();
    for (const ProductEdge& e : succ(v)) adj.push_back(e.target);
    end[v] = adj.size();
  }
  std::size_t count = 0;
  const auto comp = tarjan(
      nodes, [&](std::size_t v) { return end[v] - begin[v]; },
      [&](std::size_t v, std::size_t i) { return adj[begin[v] + i]; }, count);
  std::vector<std::size_t> size(count, 0);
  std::vector<bool> self_loop(count, false);
  for (std::size_t v : order) {
    ++size[comp[v]];
    for (const ProductEdge& e : succ(v)) {
      if (e.target == v) self_loop[comp[v]] = true;
    }
  }
  for (std::size_t r : order) {
    const std::size_t c = comp[r];
    if (!(size[c] > 1 || self_loop[c]) || !bad(r)) continue;
    PairLasso out;
    for (std::size_t v = r; v != start; v = parent[v].node) out.prefix.push_back({parent[v].first, parent[v].second});
    std::reverse(out.prefix.begin(), out.prefix.end());
    // Shortest cycle r -> r inside the SCC.
    std::vector<Parent> cyc(nodes);
    std::vector<bool> cseen(nodes, false);
    std::queue<std::size_t> q;
    q.push(r);
    Parent closing;
    bool found = false;
    while (!q.empty() && !found) {
      const std::size_t v = q.front();
      q.pop();
      for (const ProductEdge& e : succ(v)) {
        if (comp[e.target] != c) continue;
        if (e.target == r) {
          closing = {v, e.first, e.second};
          found = true;
          break;
        }
        if (!cseen[e.target]) {
          cseen[e.target] = true;
          cyc[e.target] = {v, e.first, e.second};
          q.push(e.target);
        }
      }
    }
    out.period.push_back({closing.first, closing.second});
    for (std::size_t v = closing.node; v != r; v = cyc[v].node) out.period.push_back({cyc[v].first, cyc[v].second});
    std::reverse(out.period.begin(), out.period.end());
    return out;
  }
  return std::nullopt;
}

/// Letter pairs read synchronously by two automata.
using LetterPairs = std::vector<std::pair<LetterIndex, LetterIndex>>;

inline LetterPairs identical_letters(const AlphabetSpec& alphabet) {
  LetterPairs out;
  for (LetterIndex a = 0; a < alphabet.size(); ++a) out.push_back({a, a});
  return out;
}

/// A lasso from (p, q) accepted by exactly one of A (from p) and B (from q).
inline std::optional<PairLasso> distinguishing_lasso(const Automaton& a, StateId p, const Automaton& b, StateId q,
                                                     const LetterPairs& letters) {
  const SccInfo ia = sccs(a);
  const SccInfo ib = sccs(b);
  const std::size_t nb = b.size();
  return find_bad_lasso(
      a.size() * nb, p * nb + q,
      [&](std::size_t v) {
        std::vector<ProductEdge> out;
        const auto x = static_cast<StateId>(v / nb);
        const auto y = static_cast<StateId>(v % nb);
        for (const auto& [l1, l2] : letters) out.push_back({a.step(x, l1) * nb + b.step(y, l2), l1, l2});
        return out;
      },
      [&](std::size_t v) {
        return ia.accepting_recurrent(static_cast<StateId>(v / nb)) !=
               ib.accepting_recurrent(static_cast<StateId>(v % nb));
      });
}

/// Language equality of A from q and B from p, decided on the product.
inline bool state_lang_equal_bruteforce(const Automaton& a, StateId q, const Automaton& b, StateId p) {
  if (!(a.alphabet() == b.alphabet())) throw std::invalid_argument("state_lang_equal_bruteforce: alphabet mismatch");
  return !distinguishing_lasso(a, q, b, p, identical_letters(a.alphabet())).has_value();
}

/// Component-wise difference count between two parallel words.
struct ComponentDistance {
  std::size_t value = 0;

  static ComponentDistance between(const PairWord& w, const PairWord& v, int d) {
    return {component_distance(w, v, d)};
  }
  auto operator<=>(const ComponentDistance&) const = default;
};

struct Counterexample {
  /// shape, padding, dual, sign-prefix, sign-extension or zero-dual.
  std::string kind;
  LassoWord accepted;
  /// Encoding of the same value that is rejected; absent for shape and sign-prefix.
  std::optional<LassoWord> rejected;
  std::string detail;
};

struct OracleVerdict {
  bool answer = true;
  std::optional<Counterexample> counterexample;
  /// False for results of the bounded enumeration.
  bool exact = true;
  std::size_t words_checked = 0;
};

namespace detail {

inline LetterIndex patch(const AlphabetSpec& alphabet, LetterIndex a, int f, int z) {
  if (alphabet.is_star(a)) return a;
  Letter letter = alphabet.letter_at(a);
  letter.symbols[static_cast<std::size_t>(f)] = z;
  return alphabet.index_of(letter);
}

inline LassoWord lasso_of(const AlphabetSpec& alphabet, const std::vector<LetterIndex>& prefix,
                          const std::vector<LetterIndex>& period) {
  LassoWord out;
  for (LetterIndex a : prefix) out.prefix.push_back(alphabet.letter_at(a));
  for (LetterIndex a : period) out.period.push_back(alphabet.letter_at(a));
  return out;
}

inline std::vector<LetterIndex> concat(std::vector<LetterIndex> a, const std::vector<LetterIndex>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Parallel word -> sequential word with the same separator layout.
inline LassoWord sequential_word(const LassoWord& w) { return to_lasso(sequentialize(from_lasso(w))); }

/// Value vector, or nullopt for words that are not valid encodings.
inline std::optional<RationalVector> value_if_valid(const LassoWord& w, const AlphabetSpec& alphabet, bool complement) {
  try {
    const PairWord pw = from_lasso(w);
    return complement ? value_real_complement(pw, alphabet) : value_real(pw, alphabet);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Accepts an explicit lasso word.
inline bool accepts_word(const Automaton& aut, const LassoWord& w) { return accepts_lasso(aut, w.prefix, w.period); }

/// True iff the counterexample is genuine: a shape violation is an accepted
/// malformed word; a pair consists of an accepted and a rejected encoding of
/// the same value.
inline bool verify_counterexample(const Automaton& aut, const Counterexample& cx, bool complement = false) {
  const AlphabetSpec& al = aut.alphabet();
  if (cx.accepted.period.empty() || !accepts_word(aut, cx.accepted)) return false;
  if (!cx.rejected) {
    if (cx.kind == "sign-prefix") {
      return !cx.accepted.prefix.empty() &&
             (cx.accepted.prefix.front().star ||
              !is_sign_letter(al, al.index_of(cx.accepted.prefix.front())));
    }
    return !detail::value_if_valid(cx.accepted, al, complement).has_value() ||
           (al.kind() == EncodingKind::sequential && [&] {
             // Sequential words must place the separator after whole blocks.
             for (std::size_t i = 0, stars = 0; i < cx.accepted.prefix.size(); ++i) {
               if (cx.accepted.prefix[i].star) {
                 if ((i - stars) % static_cast<std::size_t>(al.dim())) return true;
                 ++stars;
               }
             }
             return false;
           }());
  }
  if (cx.rejected->period.empty() || accepts_word(aut, *cx.rejected)) return false;
  const auto v1 = detail::value_if_valid(cx.accepted, al, complement);
  const auto v2 = detail::value_if_valid(*cx.rejected, al, complement);
  return v1 && v2 && *v1 == *v2;
}

namespace detail {

/// Shape search: product with modes nat_0..nat_{d-1}, frac, bad.
inline std::optional<Counterexample> shape_counterexample(const Automaton& aut, std::size_t d_seq) {
  const std::size_t modes = d_seq + 2;
  const std::size_t frac = d_seq, bad = d_seq + 1;
  const LetterIndex star = aut.alphabet().star_index();
  const SccInfo info = sccs(aut);
  auto lasso = find_bad_lasso(
      aut.size() * modes, aut.initial() * modes,
      [&](std::size_t v) {
        const auto q = static_cast<StateId>(v / modes);
        const std::size_t m = v % modes;
        std::vector<ProductEdge> out;
        for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
          std::size_t next;
          if (a == star) {
            next = m == 0 ? frac : bad;
          } else {
            next = m < d_seq ? (m + 1) % d_seq : m;
          }
          out.push_back({aut.step(q, a) * modes + next, a, a});
        }
        return out;
      },
      [&](std::size_t v) { return v % modes != frac && info.accepting_recurrent(static_cast<StateId>(v / modes)); });
  if (!lasso) return std::nullopt;
  Counterexample cx{"shape", lasso_of(aut.alphabet(), lasso->first_prefix(), lasso->first_period()), std::nullopt, ""};
  std::size_t stars = 0;
  for (const auto& a : cx.accepted.prefix) stars += a.star;
  bool periodic_star = false;
  for (const auto& a : cx.accepted.period) periodic_star = periodic_star || a.star;
  cx.detail = periodic_star ? "infinitely many separators"
              : stars == 0  ? "no separator"
              : stars > 1   ? "more than one separator"
                            : "separator after an incomplete block";
  return cx;
}

/// Builds a two-word counterexample from a lasso over letter pairs, with
/// optional shared prefixes, orienting it so that `accepted` is accepted.
inline Counterexample pair_counterexample(const Automaton& aut, const Automaton& reader, std::string kind,
                                          const std::vector<LetterIndex>& prefix1,
                                          const std::vector<LetterIndex>& prefix2, const PairLasso& lasso) {
  const AlphabetSpec& al = reader.alphabet();
  LassoWord w1 = lasso_of(al, concat(prefix1, lasso.first_prefix()), lasso.first_period());
  LassoWord w2 = lasso_of(al, concat(prefix2, lasso.second_prefix()), lasso.second_period());
  if (aut.alphabet().kind() == EncodingKind::sequential) {
    w1 = sequential_word(w1);
    w2 = sequential_word(w2);
  }
  if (!accepts_word(aut, w1)) std::swap(w1, w2);
  return {std::move(kind), std::move(w1), std::move(w2), ""};
}

/// Dual flips on component f: phase one runs a single copy from the start;
/// a flip letter splits it into (a with a_f, a with a_f + 1); phase two
/// reads b-1 in component f on the first copy and 0 on the second. With
/// `sign_start`, the first letter must be a sign letter and flips come after it.
inline std::optional<PairLasso> dual_flip_lasso(const Automaton& p, int f, bool sign_start) {
  const AlphabetSpec& al = p.alphabet();
  const int top = al.base() - 1;
  const std::size_t n = p.size();
  const std::size_t virt = n + n * n;
  const SccInfo info = sccs(p);
  std::vector<LetterIndex> flip_from, flip_to, tail_low;
  for (LetterIndex a = 0; a < al.digit_letter_count(); ++a) {
    const int s = al.letter_at(a).symbols[static_cast<std::size_t>(f)];
    if (s < top) {
      flip_from.push_back(a);
      flip_to.push_back(patch(al, a, f, s + 1));
    }
    if (s == 0) tail_low.push_back(a);
  }
  const LetterIndex star = al.star_index();
  auto pair_id = [n](StateId x, StateId y) { return n + static_cast<std::size_t>(x) * n + y; };
  return find_bad_lasso(
      virt + 1, sign_start ? virt : p.initial(),
      [&](std::size_t v) {
        std::vector<ProductEdge> out;
        if (v == virt) {
          for (LetterIndex a = 0; a < al.size(); ++a) {
            if (is_sign_letter(al, a)) out.push_back({p.step(p.initial(), a), a, a});
          }
        } else if (v < n) {
          const auto q = static_cast<StateId>(v);
          for (LetterIndex a = 0; a < al.size(); ++a) out.push_back({p.step(q, a), a, a});
          for (std::size_t i = 0; i < flip_from.size(); ++i) {
            out.push_back({pair_id(p.step(q, flip_from[i]), p.step(q, flip_to[i])), flip_from[i], flip_to[i]});
          }
        } else {
          const auto x = static_cast<StateId>((v - n) / n);
          const auto y = static_cast<StateId>((v - n) % n);
          for (LetterIndex c : tail_low) {
            const LetterIndex hi = patch(al, c, f, top);
            out.push_back({pair_id(p.step(x, hi), p.step(y, c)), hi, c});
          }
          out.push_back({pair_id(p.step(x, star), p.step(y, star)), star, star});
        }
        return out;
      },
      [&](std::size_t v) {
        if (v < n || v == virt) return false;
        return info.accepting_recurrent(static_cast<StateId>((v - n) / n)) !=
               info.accepting_recurrent(static_cast<StateId>((v - n) % n));
      });
}

/// Letter pairs (c with c_f = b-1, c with c_f = 0) plus the separator.
inline LetterPairs high_low_letters(const AlphabetSpec& al, int f) {
  LetterPairs out;
  for (LetterIndex c = 0; c < al.digit_letter_count(); ++c) {
    if (al.letter_at(c).symbols[static_cast<std::size_t>(f)] == 0) out.push_back({patch(al, c, f, al.base() - 1), c});
  }
  out.push_back({al.star_index(), al.star_index()});
  return out;
}

inline OracleVerdict checked(const Automaton& aut, Counterexample cx, bool complement) {
  if (!verify_counterexample(aut, cx, complement)) {
    throw std::logic_error("saturation_oracle: unverified counterexample of kind " + cx.kind);
  }
  return {false, std::move(cx), true, 0};
}

}  // namespace detail

/// Exact saturation decision for parallel and sequential encodings. The
/// optional bound is accepted for interface compatibility and ignored.
inline OracleVerdict saturation_oracle(const Automaton& aut) {
  const AlphabetSpec& al = aut.alphabet();
  if (!al.fixed().empty()) throw std::invalid_argument("saturation_oracle: fixed alphabet");
  if (!is_weak(aut)) throw std::invalid_argument("saturation_oracle: automaton is not weak");
  const bool seq = al.kind() == EncodingKind::sequential;
  if (auto cx = detail::shape_counterexample(aut, seq ? static_cast<std::size_t>(al.dim()) : 1)) {
    return detail::checked(aut, std::move(*cx), false);
  }
  const Automaton p = seq ? parallel_view(aut) : aut;
  const AlphabetSpec& pal = p.alphabet();
  const LetterIndex zero = pal.uniform_letter(0);
  if (auto lasso = distinguishing_lasso(p, p.initial(), p, p.step(p.initial(), zero), identical_letters(pal))) {
    return detail::checked(aut, detail::pair_counterexample(aut, p, "padding", {}, {zero}, *lasso), false);
  }
  for (int f = 0; f < pal.dim(); ++f) {
    if (auto lasso = detail::dual_flip_lasso(p, f, false)) {
      return detail::checked(aut, detail::pair_counterexample(aut, p, "dual", {}, {}, *lasso), false);
    }
  }
  return {};
}

/// Exact saturation decision for b-complement parallel encodings.
inline OracleVerdict saturation_oracle_complement(const Automaton& aut) {
  const AlphabetSpec& al = aut.alphabet();
  if (al.kind() != EncodingKind::parallel || !al.fixed().empty()) {
    throw std::invalid_argument("saturation_oracle_complement: expects an unfixed parallel alphabet");
  }
  if (!is_weak(aut)) throw std::invalid_argument("saturation_oracle_complement: automaton is not weak");
  if (auto cx = detail::shape_counterexample(aut, 1)) return detail::checked(aut, std::move(*cx), true);
  const SccInfo info = sccs(aut);
  const StateId q0 = aut.initial();
  for (LetterIndex x = 0; x < al.size(); ++x) {
    if (is_sign_letter(al, x)) continue;
    auto lasso = find_bad_lasso(
        aut.size(), aut.step(q0, x),
        [&](std::size_t v) {
          std::vector<ProductEdge> out;
          for (LetterIndex a = 0; a < al.size(); ++a) out.push_back({aut.step(static_cast<StateId>(v), a), a, a});
          return out;
        },
        [&](std::size_t v) { return info.accepting_recurrent(static_cast<StateId>(v)); });
    if (lasso) {
      Counterexample cx{"sign-prefix", detail::lasso_of(al, detail::concat({x}, lasso->first_prefix()), lasso->first_period()),
                        std::nullopt, "first letter is not a sign letter"};
      return detail::checked(aut, std::move(cx), true);
    }
  }
  for (LetterIndex s = 0; s < al.size(); ++s) {
    if (!is_sign_letter(al, s)) continue;
    const StateId one = aut.step(q0, s);
    if (auto lasso = distinguishing_lasso(aut, one, aut, aut.step(one, s), identical_letters(al))) {
      return detail::checked(aut, detail::pair_counterexample(aut, aut, "sign-extension", {s}, {s, s}, *lasso), true);
    }
  }
  for (int f = 0; f < al.dim(); ++f) {
    if (auto lasso = detail::dual_flip_lasso(aut, f, true)) {
      return detail::checked(aut, detail::pair_counterexample(aut, aut, "dual", {}, {}, *lasso), true);
    }
  }
  for (int f = 0; f < al.dim(); ++f) {
    if (auto lasso = distinguishing_lasso(aut, q0, aut, q0, detail::high_low_letters(al, f))) {
      return detail::checked(aut, detail::pair_counterexample(aut, aut, "zero-dual", {}, {}, *lasso), true);
    }
  }
  return {};
}

/**
 * Bounded enumeration: every lasso with prefix length <= bound and period
 * length in [1, bound] (or `cap` seeded samples of them when there are more)
 * is run; each accepted word must be a well-formed encoding whose alternative
 * encodings are all accepted. A "yes" only covers the words examined.
 */
inline OracleVerdict saturation_oracle_bounded(const Automaton& aut, std::size_t bound, std::uint64_t seed = 0,
                                               std::size_t cap = 200000) {
  const AlphabetSpec& al = aut.alphabet();
  if (!al.fixed().empty()) throw std::invalid_argument("saturation_oracle_bounded: fixed alphabet");
  const std::size_t k = al.size();
  // Words of length exactly L, for L in [0, bound].
  std::vector<double> words_of_len(bound + 1, 1.0);
  for (std::size_t i = 1; i <= bound; ++i) words_of_len[i] = words_of_len[i - 1] * static_cast<double>(k);
  double prefixes = 0, periods = 0;
  for (std::size_t i = 0; i <= bound; ++i) prefixes += words_of_len[i];
  periods = prefixes - 1;
  const bool sample = prefixes * periods > static_cast<double>(cap);

  OracleVerdict result;
  result.exact = false;
  auto examine = [&](const std::vector<LetterIndex>& u, const std::vector<LetterIndex>& v) -> bool {
    ++result.words_checked;
    if (!accepts_lasso(aut, u, v)) return true;
    const LassoWord w = detail::lasso_of(al, u, v);
    Counterexample shape{"shape", w, std::nullopt, "malformed accepted word"};
    if (verify_counterexample(aut, shape)) {
      result = {false, std::move(shape), false, result.words_checked};
      return false;
    }
    for (const PairWord& alt : alternative_encodings(from_lasso(w), al)) {
      const LassoWord aw = to_lasso(alt);
      if (!accepts_word(aut, aw)) {
        result = {false, Counterexample{"alternative", w, aw, ""}, false, result.words_checked};
        return false;
      }
    }
    return true;
  };
  auto unrank = [k](std::size_t len, std::size_t rank) {
    std::vector<LetterIndex> w(len);
    for (std::size_t i = len; i-- > 0;) {
      w[i] = static_cast<LetterIndex>(rank % k);
      rank /= k;
    }
    return w;
  };
  if (sample) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len_dist(0, bound), per_dist(1, bound);
    std::uniform_int_distribution<LetterIndex> letter(0, static_cast<LetterIndex>(k - 1));
    for (std::size_t i = 0; i < cap; ++i) {
      std::vector<LetterIndex> u(len_dist(rng)), v(per_dist(rng));
      for (auto& a : u) a = letter(rng);
      for (auto& a : v) a = letter(rng);
      if (!examine(u, v)) return result;
    }
    return result;
  }
  for (std::size_t lu = 0; lu <= bound; ++lu) {
    for (std::size_t ru = 0; ru < static_cast<std::size_t>(words_of_len[lu]); ++ru) {
      const auto u = unrank(lu, ru);
      for (std::size_t lv = 1; lv <= bound; ++lv) {
        for (std::size_t rv = 0; rv < static_cast<std::size_t>(words_of_len[lv]); ++rv) {
          if (!examine(u, unrank(lv, rv))) return result;
        }
      }
    }
  }
  return result;
}

/// Default enumeration bound: n + 2.
inline std::size_t default_sample_bound(const Automaton& aut) { return aut.size() + 2; }

namespace detail {

/// Shortest word from the initial state to q.
inline std::vector<LetterIndex> path_to(const Automaton& aut, StateId target) {
  std::vector<std::pair<StateId, LetterIndex>> parent(aut.size(), {static_cast<StateId>(-1), 0});
  std::vector<bool> seen(aut.size(), false);
  std::queue<StateId> todo;
  todo.push(aut.initial());
  seen[aut.initial()] = true;
  while (!todo.empty()) {
    const StateId q = todo.front();
    todo.pop();
    for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
      const StateId t = aut.step(q, a);
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = {q, a};
        todo.push(t);
      }
    }
  }
  if (!seen[target]) throw std::invalid_argument("path_to: state not accessible");
  std::vector<LetterIndex> out;
  for (StateId q = target; q != aut.initial(); q = parent[q].first) out.push_back(parent[q].second);
  std::reverse(out.begin(), out.end());
  return out;
}

inline std::optional<Counterexample> expand_structural(const Automaton& aut, const Witness& w) {
  const AlphabetSpec& al = aut.alphabet();
  const bool seq = al.kind() == EncodingKind::sequential;
  const Automaton m = minimized_for_check(al.dim() == 1 && seq ? as_parallel_dim1(aut) : aut);
  const AlphabetSpec& mal = m.alphabet();
  const StateId q0 = m.initial();
  if (std::holds_alternative<witness::NotShape>(w)) return shape_counterexample(aut, seq ? al.dim() : 1);
  if (std::holds_alternative<witness::ZeroLoopBroken>(w)) {
    const std::vector<LetterIndex> zero(seq ? static_cast<std::size_t>(mal.dim()) : 1,
                                        seq ? 0 : mal.uniform_letter(0));
    const StateId z = run_prefix(m, q0, std::span<const LetterIndex>(zero));
    auto lasso = distinguishing_lasso(m, q0, m, z, identical_letters(mal));
    if (!lasso) return std::nullopt;
    LassoWord w1 = lasso_of(mal, lasso->first_prefix(), lasso->first_period());
    LassoWord w2 = lasso_of(mal, concat(zero, lasso->second_prefix()), lasso->second_period());
    if (!accepts_word(m, w1)) std::swap(w1, w2);
    return Counterexample{"padding", w1, w2, ""};
  }
  if (const auto* pm = std::get_if<witness::PairMismatch>(&w)) {
    const std::vector<LetterIndex> u = path_to(m, pm->state);
    const LetterIndex a1 = mal.index_of(pm->letter);
    const LetterIndex a2 = mal.index_of(pm->incremented);
    std::optional<PairLasso> lasso;
    LetterPairs letters;
    if (seq && mal.kind() == EncodingKind::sequential) {
      const auto d = static_cast<std::size_t>(mal.dim());
      const Automaton hi = fix_sequential(m, mal.base() - 1).automaton;
      const Automaton lo = fix_sequential(m, 0).automaton;
      lasso = distinguishing_lasso(hi, static_cast<StateId>(m.step(pm->state, a1) * d), lo,
                                   static_cast<StateId>(m.step(pm->state, a2) * d), identical_letters(hi.alphabet()));
      if (!lasso) return std::nullopt;
      // Replace the box letter by the fixed digit of each copy.
      const auto box = static_cast<LetterIndex>(mal.base());
      const auto star_fixed = hi.alphabet().star_index();
      auto unbox = [&](std::vector<LetterIndex> v, LetterIndex digit) {
        for (auto& l : v) l = l == box ? digit : (l == star_fixed ? mal.star_index() : l);
        return v;
      };
      const auto top = static_cast<LetterIndex>(mal.base() - 1);
      LassoWord w1 = lasso_of(mal, concat(concat(u, {a1}), unbox(lasso->first_prefix(), top)),
                              unbox(lasso->first_period(), top));
      LassoWord w2 = lasso_of(mal, concat(concat(u, {a2}), unbox(lasso->second_prefix(), 0)),
                              unbox(lasso->second_period(), 0));
      if (!accepts_word(m, w1)) std::swap(w1, w2);
      return Counterexample{"dual", w1, w2, ""};
    }
    lasso = distinguishing_lasso(m, m.step(pm->state, a1), m, m.step(pm->state, a2),
                                 high_low_letters(mal, pm->component));
    if (!lasso) return std::nullopt;
    LassoWord w1 = lasso_of(mal, concat(concat(u, {a1}), lasso->first_prefix()), lasso->first_period());
    LassoWord w2 = lasso_of(mal, concat(concat(u, {a2}), lasso->second_prefix()), lasso->second_period());
    if (!accepts_word(m, w1)) std::swap(w1, w2);
    return Counterexample{"dual", w1, w2, ""};
  }
  return std::nullopt;
}

}  // namespace detail

/// Concrete counterexample for a negative verdict: derived from the
/// structural witness when possible, from the exact oracle otherwise. The
/// result is verified against `aut`; nullopt if no verified words exist.
inline std::optional<Counterexample> expand_witness(const Automaton& aut, const Verdict& verdict,
                                                    bool complement = false) {
  if (verdict.answer || !verdict.witness) return std::nullopt;
  if (!complement) {
    std::optional<Counterexample> cx;
    try {
      cx = detail::expand_structural(aut, *verdict.witness);
    } catch (const std::invalid_argument&) {
      cx.reset();
    }
    // One-dimensional parallel and sequential letters coincide, so structural
    // words need no conversion.
    if (cx && verify_counterexample(aut, *cx)) return cx;
  }
  if (!is_weak(aut)) return std::nullopt;
  const OracleVerdict o = complement ? saturation_oracle_complement(aut) : saturation_oracle(aut);
  return o.counterexample;
}

}  // namespace rva
