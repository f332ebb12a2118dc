#pragma once

/**
 * @file automaton.hpp
 * @brief Total deterministic Büchi automata over digit alphabets.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rva/alphabet.hpp"

namespace rva {

/// Immutable total deterministic Büchi automaton with a dense transition table.
class Automaton {
 public:
  Automaton() = default;

  Automaton(AlphabetSpec alphabet, std::size_t states, StateId initial,
            std::vector<bool> accepting, std::vector<StateId> delta)
      : alphabet_(std::move(alphabet)),
        states_(states),
        initial_(initial),
        accepting_(std::move(accepting)),
        delta_(std::move(delta)) {
    if (states_ == 0) throw std::invalid_argument("automaton: needs at least one state");
    if (initial_ >= states_) throw std::invalid_argument("automaton: initial state out of range");
    if (accepting_.size() != states_) throw std::invalid_argument("automaton: accepting mask size mismatch");
    if (delta_.size() != states_ * alphabet_.size()) {
      throw std::invalid_argument("automaton: transition table size mismatch");
    }
    for (StateId target : delta_) {
      if (target >= states_) throw std::invalid_argument("automaton: transition target out of range");
    }
  }

  const AlphabetSpec& alphabet() const { return alphabet_; }
  std::size_t size() const { return states_; }
  std::size_t letter_count() const { return alphabet_.size(); }
  StateId initial() const { return initial_; }
  bool accepting(StateId q) const { return accepting_[q]; }
  const std::vector<bool>& accepting_mask() const { return accepting_; }
  const std::vector<StateId>& table() const { return delta_; }

  StateId step(StateId q, LetterIndex a) const { return delta_[q * letter_count() + a]; }
  StateId step(StateId q, const Letter& a) const { return step(q, alphabet_.index_of(a)); }

  /// Successor row of q, indexed by letter.
  std::span<const StateId> row(StateId q) const {
    return {delta_.data() + q * letter_count(), letter_count()};
  }

  Automaton with_initial(StateId q) const {
    Automaton copy = *this;
    if (q >= states_) throw std::invalid_argument("automaton: initial state out of range");
    copy.initial_ = q;
    return copy;
  }

  bool operator==(const Automaton&) const = default;

 private:
  AlphabetSpec alphabet_;
  std::size_t states_ = 0;
  StateId initial_ = 0;
  std::vector<bool> accepting_;
  std::vector<StateId> delta_;
};

/// Mutable helper for building automata; unset transitions stay empty until build().
class AutomatonBuilder {
 public:
  static constexpr StateId kUnset = static_cast<StateId>(-1);

  AutomatonBuilder(AlphabetSpec alphabet, std::size_t states)
      : alphabet_(std::move(alphabet)),
        states_(states),
        accepting_(states, false),
        delta_(states * alphabet_.size(), kUnset) {}

  const AlphabetSpec& alphabet() const { return alphabet_; }
  std::size_t size() const { return states_; }

  StateId add_state(bool accepting = false) {
    accepting_.push_back(accepting);
    delta_.resize(delta_.size() + alphabet_.size(), kUnset);
    return static_cast<StateId>(states_++);
  }
  void set_initial(StateId q) { initial_ = q; }
  void set_accepting(StateId q, bool value = true) { accepting_.at(q) = value; }
  void set(StateId q, LetterIndex a, StateId target) { delta_.at(q * alphabet_.size() + a) = target; }
  void set(StateId q, const Letter& a, StateId target) { set(q, alphabet_.index_of(a), target); }
  StateId get(StateId q, LetterIndex a) const { return delta_.at(q * alphabet_.size() + a); }

  /// Sets every still-unset transition of q to target.
  void fill(StateId q, StateId target) {
    for (LetterIndex a = 0; a < alphabet_.size(); ++a) {
      if (get(q, a) == kUnset) set(q, a, target);
    }
  }

  /// First (state, letter) without a transition, if any.
  std::optional<std::pair<StateId, LetterIndex>> missing() const {
    for (std::size_t i = 0; i < delta_.size(); ++i) {
      if (delta_[i] == kUnset) {
        return std::pair{static_cast<StateId>(i / alphabet_.size()),
                         static_cast<LetterIndex>(i % alphabet_.size())};
      }
    }
    return std::nullopt;
  }

  /// Routes every unset transition to a fresh rejecting sink; no-op when total.
  void complete_with_sink() {
    if (!missing()) return;
    const StateId sink = add_state(false);
    for (auto& target : delta_) {
      if (target == kUnset) target = sink;
    }
  }

  Automaton build() const {
    if (auto gap = missing()) {
      throw std::invalid_argument("automaton: missing transition from state " + std::to_string(gap->first) +
                                  " on letter " + to_string(alphabet_.letter_at(gap->second)));
    }
    return Automaton(alphabet_, states_, initial_, accepting_, delta_);
  }

 private:
  AlphabetSpec alphabet_;
  std::size_t states_;
  StateId initial_ = 0;
  std::vector<bool> accepting_;
  std::vector<StateId> delta_;
};

inline StateId step(const Automaton& aut, StateId q, const Letter& a) { return aut.step(q, a); }

inline StateId run_prefix(const Automaton& aut, StateId q, std::span<const LetterIndex> word) {
  for (LetterIndex a : word) q = aut.step(q, a);
  return q;
}

inline StateId run_prefix(const Automaton& aut, StateId q, std::span<const Letter> word) {
  for (const Letter& a : word) q = aut.step(q, a);
  return q;
}

enum class SccKind { transient, accepting_recurrent, rejecting_recurrent, mixed };

/// SCC partition; ids are in Tarjan emission order (successor SCCs before predecessors).
struct SccInfo {
  std::vector<std::uint32_t> scc_of;
  std::vector<SccKind> kind;
  std::vector<std::vector<StateId>> members;

  std::size_t count() const { return kind.size(); }
  bool recurrent(StateId q) const { return kind[scc_of[q]] != SccKind::transient; }
  bool accepting_recurrent(StateId q) const { return kind[scc_of[q]] == SccKind::accepting_recurrent; }
};

/// Iterative Tarjan over successor(v, i) for i < degree(v); returns the scc
/// id per node.
template <class Degree, class Successor>
std::vector<std::uint32_t> tarjan(std::size_t nodes, Degree&& degree, Successor&& successor, std::size_t& scc_count) {
  using Index = std::uint32_t;
  constexpr Index kNone = static_cast<Index>(-1);
  if (nodes >= kNone) throw std::length_error("tarjan: graph too large");
  std::vector<Index> index(nodes, kNone), low(nodes, 0), comp(nodes, kNone);
  std::vector<bool> on_stack(nodes, false);
  std::vector<Index> stack;
  struct Frame {
    Index node;
    Index next;
  };
  std::vector<Frame> call;
  Index counter = 0;
  scc_count = 0;
  auto enter = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(static_cast<Index>(v));
    on_stack[v] = true;
    call.push_back({static_cast<Index>(v), 0});
  };
  for (std::size_t root = 0; root < nodes; ++root) {
    if (index[root] != kNone) continue;
    enter(root);
    while (!call.empty()) {
      Frame& frame = call.back();
      if (frame.next < degree(frame.node)) {
        const std::size_t w = successor(frame.node, frame.next++);
        if (index[w] == kNone) {
          enter(w);
        } else if (on_stack[w]) {
          low[frame.node] = std::min(low[frame.node], index[w]);
        }
        continue;
      }
      const Index v = frame.node;
      call.pop_back();
      if (low[v] == index[v]) {
        Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = static_cast<Index>(scc_count);
        } while (w != v);
        ++scc_count;
      }
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
    }
  }
  return comp;
}

inline SccInfo sccs(const Automaton& aut) {
  SccInfo info;
  std::size_t count = 0;
  info.scc_of = tarjan(
      aut.size(),
      [k = aut.letter_count()](std::size_t) { return k; },
      [&](std::size_t q, std::size_t a) { return aut.step(static_cast<StateId>(q), static_cast<LetterIndex>(a)); },
      count);
  info.members.assign(count, {});
  for (StateId q = 0; q < aut.size(); ++q) info.members[info.scc_of[q]].push_back(q);
  info.kind.assign(count, SccKind::transient);
  for (std::size_t c = 0; c < count; ++c) {
    const auto& members = info.members[c];
    bool cyclic = members.size() > 1;
    if (!cyclic) {
      for (StateId t : aut.row(members.front())) cyclic = cyclic || t == members.front();
    }
    if (!cyclic) continue;
    bool any_acc = false, any_rej = false;
    for (StateId q : members) (aut.accepting(q) ? any_acc : any_rej) = true;
    info.kind[c] = any_acc && any_rej ? SccKind::mixed
                   : any_acc          ? SccKind::accepting_recurrent
                                      : SccKind::rejecting_recurrent;
  }
  return info;
}

/// True iff the accepting set is a union of SCCs.
inline bool is_weak(const Automaton& aut) {
  const SccInfo info = sccs(aut);
  for (const auto& members : info.members) {
    for (StateId q : members) {
      if (aut.accepting(q) != aut.accepting(members.front())) return false;
    }
  }
  return true;
}

/// Büchi acceptance of u v^omega from state `from`.
inline bool accepts_lasso_from(const Automaton& aut, StateId from, std::span<const LetterIndex> prefix,
                               std::span<const LetterIndex> period) {
  if (period.empty()) throw std::invalid_argument("accepts_lasso: period must be non-empty");
  StateId q = run_prefix(aut, from, prefix);
  // Iterate the period until the state at a period boundary repeats.
  std::vector<std::size_t> seen_at(aut.size(), static_cast<std::size_t>(-1));
  std::vector<StateId> boundary;
  while (seen_at[q] == static_cast<std::size_t>(-1)) {
    seen_at[q] = boundary.size();
    boundary.push_back(q);
    q = run_prefix(aut, q, period);
  }
  for (std::size_t i = seen_at[q]; i < boundary.size(); ++i) {
    StateId p = boundary[i];
    for (LetterIndex a : period) {
      if (aut.accepting(p)) return true;
      p = aut.step(p, a);
    }
  }
  return false;
}

inline bool accepts_lasso(const Automaton& aut, std::span<const LetterIndex> prefix,
                          std::span<const LetterIndex> period) {
  return accepts_lasso_from(aut, aut.initial(), prefix, period);
}

inline std::vector<LetterIndex> to_indices(const AlphabetSpec& alphabet, std::span<const Letter> word) {
  std::vector<LetterIndex> out;
  out.reserve(word.size());
  for (const Letter& a : word) out.push_back(alphabet.index_of(a));
  return out;
}

inline bool accepts_lasso(const Automaton& aut, std::span<const Letter> prefix, std::span<const Letter> period) {
  const auto u = to_indices(aut.alphabet(), prefix);
  const auto v = to_indices(aut.alphabet(), period);
  return accepts_lasso(aut, u, v);
}

/// States reachable from `from` (including it).
inline std::vector<bool> reachable_from(const Automaton& aut, StateId from) {
  std::vector<bool> seen(aut.size(), false);
  std::vector<StateId> todo{from};
  seen[from] = true;
  while (!todo.empty()) {
    const StateId q = todo.back();
    todo.pop_back();
    for (StateId t : aut.row(q)) {
      if (!seen[t]) {
        seen[t] = true;
        todo.push_back(t);
      }
    }
  }
  return seen;
}

struct TrimResult {
  Automaton automaton;
  /// Old state -> new state, or kDropped for unreachable states.
  std::vector<StateId> old_to_new;
  static constexpr StateId kDropped = static_cast<StateId>(-1);
};

/// Restriction to states reachable from the initial state, renumbered in BFS order.
inline TrimResult trim_accessible(const Automaton& aut) {
  std::vector<StateId> map(aut.size(), TrimResult::kDropped);
  std::vector<StateId> order;
  std::queue<StateId> todo;
  map[aut.initial()] = 0;
  order.push_back(aut.initial());
  todo.push(aut.initial());
  while (!todo.empty()) {
    const StateId q = todo.front();
    todo.pop();
    for (StateId t : aut.row(q)) {
      if (map[t] == TrimResult::kDropped) {
        map[t] = static_cast<StateId>(order.size());
        order.push_back(t);
        todo.push(t);
      }
    }
  }
  const std::size_t k = aut.letter_count();
  std::vector<bool> accepting(order.size());
  std::vector<StateId> delta(order.size() * k);
  for (std::size_t i = 0; i < order.size(); ++i) {
    accepting[i] = aut.accepting(order[i]);
    for (LetterIndex a = 0; a < k; ++a) delta[i * k + a] = map[aut.step(order[i], a)];
  }
  return {Automaton(aut.alphabet(), order.size(), 0, std::move(accepting), std::move(delta)), std::move(map)};
}

/// Predecessor lists in CSR form, per letter.
struct Predecessors {
  std::size_t letters = 0;
  std::vector<std::size_t> start;  // (q * letters + a) -> offset, size n*letters+1
  std::vector<StateId> sources;

  std::span<const StateId> of(StateId q, LetterIndex a) const {
    const std::size_t slot = q * letters + a;
    return {sources.data() + start[slot], start[slot + 1] - start[slot]};
  }
};

inline Predecessors predecessors(const Automaton& aut) {
  Predecessors pred;
  const std::size_t n = aut.size(), k = aut.letter_count();
  pred.letters = k;
  pred.start.assign(n * k + 1, 0);
  for (StateId q = 0; q < n; ++q) {
    for (LetterIndex a = 0; a < k; ++a) ++pred.start[aut.step(q, a) * k + a + 1];
  }
  for (std::size_t i = 1; i < pred.start.size(); ++i) pred.start[i] += pred.start[i - 1];
  pred.sources.resize(n * k);
  std::vector<std::size_t> fill(pred.start.begin(), pred.start.end() - 1);
  for (StateId q = 0; q < n; ++q) {
    for (LetterIndex a = 0; a < k; ++a) pred.sources[fill[aut.step(q, a) * k + a]++] = q;
  }
  return pred;
}

}  // namespace rva
