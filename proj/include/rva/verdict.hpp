#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rva/alphabet.hpp"

namespace rva {

namespace witness {

struct NotWeak {};
/// Some state reached in the natural/fractional part misbehaves on `*`,
/// or star-free words are accepted from it.
struct NotShape {
  StateId state;
  std::string reason;
};
/// Reading the zero letter (block) from the initial state leaves it.
struct ZeroLoopBroken {
  StateId state;
};
/// Languages of the (b-1)-fixed automaton from step(q, a) and of the
/// 0-fixed automaton from step(q, a') differ.
struct PairMismatch {
  int component;
  StateId state;
  Letter letter;
  Letter incremented;
};
/// A non-sign first letter leads to a non-empty language.
struct ComplementPrefix {
  Letter letter;
};
/// A sign letter is not absorbed: step(q0, aa) != step(q0, a).
struct ComplementAbsorption {
  Letter letter;
};
/// The two fixed automata disagree on their initial languages (encodings of 0).
struct ComplementInitialLanguage {
  int component;
};

}  // namespace witness

using Witness = std::variant<witness::NotWeak, witness::NotShape, witness::ZeroLoopBroken, witness::PairMismatch,
                             witness::ComplementPrefix, witness::ComplementAbsorption,
                             witness::ComplementInitialLanguage>;

/// Decision result; a negative answer always carries a witness. State ids in
/// witnesses refer to `checked_states`-sized minimized automaton.
struct Verdict {
  bool answer = true;
  std::optional<Witness> witness;
  std::size_t checked_states = 0;

  static Verdict yes(std::size_t states = 0) { return {true, std::nullopt, states}; }
  static Verdict no(Witness w, std::size_t states = 0) { return {false, std::move(w), states}; }
  explicit operator bool() const { return answer; }
};

inline std::string witness_kind(const Witness& w) {
  struct Visitor {
    std::string operator()(const witness::NotWeak&) const { return "not-weak"; }
    std::string operator()(const witness::NotShape&) const { return "not-shape"; }
    std::string operator()(const witness::ZeroLoopBroken&) const { return "zero-loop-broken"; }
    std::string operator()(const witness::PairMismatch&) const { return "pair-mismatch"; }
    std::string operator()(const witness::ComplementPrefix&) const { return "complement-prefix"; }
    std::string operator()(const witness::ComplementAbsorption&) const { return "complement-absorption"; }
    std::string operator()(const witness::ComplementInitialLanguage&) const { return "complement-initial-language"; }
  };
  return std::visit(Visitor{}, w);
}

}  // namespace rva
