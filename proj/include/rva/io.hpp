#pragma once

/**
 * @file io.hpp
 * @brief Text format for automata and JSON rendering of verdicts.
 *
 *     rva-automaton v1
 *     base: 3
 *     dim: 1
 *     encoding: parallel
 *     states: 7
 *     initial: 0
 *     accepting: 0 5
 *     transitions:
 *     0 0 -> 1
 *     0 * -> 6
 *
 * `#` starts a comment. An optional `fixed: <i> ...` line lists components
 * read as `_`.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "rva/automaton.hpp"
#include "rva/encoding.hpp"
#include "rva/oracle.hpp"
#include "rva/verdict.hpp"

namespace rva {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ParseOptions {
  /// Route missing transitions to a fresh rejecting sink instead of failing.
  bool complete_with_sink = false;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline std::size_t parse_count(const Token& t, std::size_t line) {
  if (t.text.empty() || t.text.size() > 9 || t.text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, t.column, "expected a non-negative integer, got '" + t.text + "'");
  }
  return std::stoul(t.text);
}

}  // namespace detail

inline Automaton parse_automaton(const std::string& text, const ParseOptions& options = {}) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool saw_magic = false, in_transitions = false;
  std::map<std::string, std::vector<detail::Token>> header;
  std::map<std::string, std::size_t> header_line;
  std::optional<AutomatonBuilder> builder;
  std::vector<std::size_t> defined_at;

  auto need = [&](const std::string& key) -> const std::vector<detail::Token>& {
    auto it = header.find(key);
    if (it == header.end()) throw ParseError(line_no, 1, "missing '" + key + ":' line before 'transitions:'");
    return it->second;
  };
  auto single = [&](const std::string& key) -> const detail::Token& {
    const auto& v = need(key);
    if (v.size() != 1) throw ParseError(header_line[key], 1, "'" + key + ":' expects exactly one value");
    return v.front();
  };

  auto start_transitions = [&]() {
    const std::size_t base = detail::parse_count(single("base"), header_line["base"]);
    const std::size_t dim = detail::parse_count(single("dim"), header_line["dim"]);
    const detail::Token& enc = single("encoding");
    EncodingKind kind;
    if (enc.text == "parallel") {
      kind = EncodingKind::parallel;
    } else if (enc.text == "sequential") {
      kind = EncodingKind::sequential;
    } else {
      throw ParseError(header_line["encoding"], enc.column, "encoding must be 'parallel' or 'sequential'");
    }
    std::vector<int> fixed;
    if (header.count("fixed")) {
      for (const auto& t : header["fixed"]) fixed.push_back(static_cast<int>(detail::parse_count(t, header_line["fixed"])));
    }
    std::optional<AlphabetSpec> alphabet;
    try {
      alphabet.emplace(static_cast<int>(base), static_cast<int>(dim), kind, fixed);
    } catch (const std::invalid_argument& e) {
      throw ParseError(header_line["base"], 1, e.what());
    }
    const std::size_t n = detail::parse_count(single("states"), header_line["states"]);
    if (n == 0) throw ParseError(header_line["states"], 1, "an automaton needs at least one state");
    builder.emplace(*alphabet, n);
    defined_at.assign(n * alphabet->size(), 0);
    const detail::Token& init = single("initial");
    const std::size_t q0 = detail::parse_count(init, header_line["initial"]);
    if (q0 >= n) throw ParseError(header_line["initial"], init.column, "initial state out of range");
    builder->set_initial(static_cast<StateId>(q0));
    for (const auto& t : need("accepting")) {
      const std::size_t q = detail::parse_count(t, header_line["accepting"]);
      if (q >= n) throw ParseError(header_line["accepting"], t.column, "accepting state out of range");
      builder->set_accepting(static_cast<StateId>(q));
    }
  };

  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto tokens = detail::tokenize(raw);
    if (tokens.empty()) continue;
    if (!saw_magic) {
      if (tokens.size() != 2 || tokens[0].text != "rva-automaton" || tokens[1].text != "v1") {
        throw ParseError(line_no, tokens[0].column, "expected header 'rva-automaton v1'");
      }
      saw_magic = true;
      continue;
    }
    if (!in_transitions) {
      const std::string& key = tokens[0].text;
      if (key.empty() || key.back() != ':') throw ParseError(line_no, tokens[0].column, "expected '<key>:'");
      const std::string name = key.substr(0, key.size() - 1);
      if (name == "transitions") {
        if (tokens.size() != 1) throw ParseError(line_no, tokens[1].column, "unexpected text after 'transitions:'");
        start_transitions();
        in_transitions = true;
        continue;
      }
      static const std::vector<std::string> known{"base", "dim", "encoding", "fixed", "states", "initial", "accepting"};
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw ParseError(line_no, tokens[0].column, "unknown key '" + name + "'");
      }
      if (header.count(name)) throw ParseError(line_no, tokens[0].column, "duplicate '" + name + ":' line");
      header[name] = std::vector<detail::Token>(tokens.begin() + 1, tokens.end());
      header_line[name] = line_no;
      continue;
    }
    if (tokens.size() != 4 || tokens[2].text != "->") {
      throw ParseError(line_no, tokens[0].column, "expected '<src> <letter> -> <dst>'");
    }
    const std::size_t n = builder->size();
    const std::size_t src = detail::parse_count(tokens[0], line_no);
    if (src >= n) throw ParseError(line_no, tokens[0].column, "source state out of range");
    const std::size_t dst = detail::parse_count(tokens[3], line_no);
    if (dst >= n) throw ParseError(line_no, tokens[3].column, "target state out of range");
    LetterIndex a;
    try {
      a = builder->alphabet().index_of(parse_letter(tokens[1].text, builder->alphabet()));
    } catch (const std::exception& e) {
      throw ParseError(line_no, tokens[1].column, e.what());
    }
    std::size_t& seen = defined_at[src * builder->alphabet().size() + a];
    if (seen) {
      throw ParseError(line_no, tokens[0].column,
                       "duplicate transition for state " + std::to_string(src) + " and letter " + tokens[1].text +
                           " (first on line " + std::to_string(seen) + ")");
    }
    seen = line_no;
    builder->set(static_cast<StateId>(src), a, static_cast<StateId>(dst));
  }
  if (!saw_magic) throw ParseError(line_no + 1, 1, "empty input");
  if (!in_transitions) throw ParseError(line_no + 1, 1, "missing 'transitions:' section");
  if (auto gap = builder->missing()) {
    if (!options.complete_with_sink) {
      throw ParseError(line_no + 1, 1,
                       "missing transition from state " + std::to_string(gap->first) + " on letter " +
                           to_string(builder->alphabet().letter_at(gap->second)) +
                           " (use --complete-with-sink to add a rejecting sink)");
    }
    builder->complete_with_sink();
  }
  return builder->build();
}

/// Canonical text: states ascending, letters by index.
inline std::string serialize_automaton(const Automaton& aut) {
  const AlphabetSpec& al = aut.alphabet();
  std::ostringstream out;
  out << "rva-automaton v1\n";
  out << "base: " << al.base() << "\n";
  out << "dim: " << al.dim() << "\n";
  out << "encoding: " << to_string(al.kind()) << "\n";
  if (!al.fixed().empty()) {
    out << "fixed:";
    for (int f : al.fixed()) out << ' ' << f;
    out << "\n";
  }
  out << "states: " << aut.size() << "\n";
  out << "initial: " << aut.initial() << "\n";
  out << "accepting:";
  for (StateId q = 0; q < aut.size(); ++q) {
    if (aut.accepting(q)) out << ' ' << q;
  }
  out << "\ntransitions:\n";
  for (StateId q = 0; q < aut.size(); ++q) {
    for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
      out << q << ' ' << to_string(al.letter_at(a)) << " -> " << aut.step(q, a) << "\n";
    }
  }
  return out.str();
}

inline nlohmann::json witness_json(const Witness& w) {
  nlohmann::json j;
  j["kind"] = witness_kind(w);
  if (const auto* s = std::get_if<witness::NotShape>(&w)) {
    j["state"] = s->state;
    j["reason"] = s->reason;
  } else if (const auto* z = std::get_if<witness::ZeroLoopBroken>(&w)) {
    j["state"] = z->state;
  } else if (const auto* p = std::get_if<witness::PairMismatch>(&w)) {
    j["component"] = p->component;
    j["state"] = p->state;
    j["letter"] = to_string(p->letter);
    j["incremented"] = to_string(p->incremented);
  } else if (const auto* c = std::get_if<witness::ComplementPrefix>(&w)) {
    j["letter"] = to_string(c->letter);
  } else if (const auto* c2 = std::get_if<witness::ComplementAbsorption>(&w)) {
    j["letter"] = to_string(c2->letter);
  } else if (const auto* c3 = std::get_if<witness::ComplementInitialLanguage>(&w)) {
    j["component"] = c3->component;
  }
  return j;
}

/// Human-readable one-line witness.
inline std::string describe(const Witness& w) {
  std::string out = witness_kind(w);
  const nlohmann::json j = witness_json(w);
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") continue;
    out += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out;
}

inline nlohmann::json values_json(const LassoWord& w, const AlphabetSpec& alphabet, bool complement) {
  nlohmann::json arr = nlohmann::json::array();
  try {
    const PairWord pw = from_lasso(w);
    for (const auto& v : complement ? value_real_complement(pw, alphabet) : value_real(pw, alphabet)) {
      arr.push_back(to_string(v));
    }
  } catch (const std::invalid_argument&) {
    return nullptr;
  }
  return arr;
}

inline nlohmann::json counterexample_json(const Counterexample& cx, const AlphabetSpec& alphabet,
                                          bool complement = false) {
  nlohmann::json j;
  j["kind"] = cx.kind;
  j["accepted"] = format_word(cx.accepted);
  j["rejected"] = cx.rejected ? nlohmann::json(format_word(*cx.rejected)) : nlohmann::json(nullptr);
  j["value"] = values_json(cx.accepted, alphabet, complement);
  if (!cx.detail.empty()) j["detail"] = cx.detail;
  return j;
}

inline nlohmann::json verdict_json(const Verdict& v, double time_ms) {
  nlohmann::json j;
  j["answer"] = v.answer;
  j["witness"] = v.witness ? witness_json(*v.witness) : nlohmann::json(nullptr);
  j["stats"] = {{"states", v.checked_states}, {"time_ms", time_ms}};
  return j;
}

}  // namespace rva
