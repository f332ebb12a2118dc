#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rva/rva.hpp"

namespace {

using namespace rva;
using nlohmann::json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  bool complete_with_sink = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

Automaton load(const std::string& path, const Globals& g) {
  const std::string text = read_file(path);
  try {
    return parse_automaton(text, ParseOptions{g.complete_with_sink});
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void print_counterexample(const Counterexample& cx, const AlphabetSpec& al, bool complement) {
  const json j = counterexample_json(cx, al, complement);
  std::cout << "  counterexample (" << cx.kind << (cx.detail.empty() ? "" : ", " + cx.detail) << ")\n";
  std::cout << "    accepted: " << j["accepted"].get<std::string>() << "\n";
  if (cx.rejected) std::cout << "    rejected: " << j["rejected"].get<std::string>() << "\n";
  if (j["value"].is_array()) {
    std::cout << "    value:";
    for (const auto& v : j["value"]) std::cout << ' ' << v.get<std::string>();
    std::cout << "\n";
  }
}

int cmd_classify(const std::string& path, const Globals& g) {
  const Automaton aut = load(path, g);
  const AlphabetSpec& al = aut.alphabet();
  const bool weak = is_weak(aut);
  const bool sequential = al.kind() == EncodingKind::sequential;
  std::optional<Verdict> shape;
  if (weak && al.fixed().empty()) shape = sequential ? is_d_sequential(aut) : is_d_parallel(aut);
  const bool ok = weak && shape && shape->answer;
  if (g.json) {
    json j{{"states", aut.size()},
           {"base", al.base()},
           {"dim", al.dim()},
           {"encoding", to_string(al.kind())},
           {"weak", weak},
           {"shape", shape ? verdict_json(*shape, 0) : json(nullptr)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "states: " << aut.size() << "\n";
    std::cout << "alphabet: base " << al.base() << ", dim " << al.dim() << ", " << to_string(al.kind()) << "\n";
    std::cout << "weak: " << (weak ? "yes" : "no") << "\n";
    const std::string label = std::to_string(al.dim()) + (sequential ? "-sequential" : "-parallel");
    if (!shape) {
      std::cout << label << ": not checked\n";
    } else if (shape->answer) {
      std::cout << label << ": yes\n";
    } else {
      std::cout << label << ": no (" << describe(*shape->witness) << ")\n";
    }
  }
  return ok ? kHolds : kFails;
}

int cmd_check(const std::string& path, const std::string& mode_text, const Globals& g) {
  const Automaton aut = load(path, g);
  CheckMode mode;
  try {
    mode = mode_text.empty() ? default_mode(aut.alphabet()) : parse_check_mode(mode_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = check_rva(aut, mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const double ms = elapsed_ms(start);
  const bool complement = mode == CheckMode::complement;
  std::optional<Counterexample> cx;
  if (!v.answer) cx = expand_witness(aut, v, complement);
  if (g.json) {
    json j = verdict_json(v, ms);
    if (!v.answer) j["counterexample"] = cx ? counterexample_json(*cx, aut.alphabet(), complement) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else if (v.answer) {
    std::cout << "yes (" << v.checked_states << " states, " << ms << " ms)\n";
  } else {
    std::cout << "no: " << describe(*v.witness) << " (" << v.checked_states << " states, " << ms << " ms)\n";
    if (cx) print_counterexample(*cx, aut.alphabet(), complement);
  }
  return v.answer ? kHolds : kFails;
}

int cmd_minimize(const std::string& path, const std::string& out, const Globals& g) {
  const Automaton aut = load(path, g);
  if (!is_weak(aut)) throw UsageError("minimize: automaton is not weak");
  const Morphism m = minimize_weak(aut);
  const auto classes = m.classes();
  if (!out.empty()) write_file(out, serialize_automaton(m.target));
  if (g.json) {
    json j{{"states", m.target.size()}, {"classes", classes}, {"map", m.map}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "states: " << aut.size() << " -> " << m.target.size() << "\n";
    for (StateId c = 0; c < classes.size(); ++c) {
      std::cout << "class " << c << ":";
      for (StateId q : classes[c]) std::cout << " q" << q;
      std::cout << "\n";
    }
    if (out.empty()) std::cout << serialize_automaton(m.target);
  }
  return kHolds;
}

int cmd_eval(const std::string& path, const std::string& word, bool complement, const Globals& g) {
  const Automaton aut = load(path, g);
  LassoWord w;
  try {
    w = parse_word(word, aut.alphabet());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--word: ") + e.what());
  }
  const bool accepted = accepts_word(aut, w);
  const json value = aut.alphabet().fixed().empty() ? values_json(w, aut.alphabet(), complement) : json(nullptr);
  if (g.json) {
    std::cout << json{{"accepted", accepted}, {"word", format_word(w)}, {"value", value}}.dump(2) << "\n";
  } else {
    std::cout << (accepted ? "accepted" : "rejected") << ": " << format_word(w) << "\n";
    if (value.is_array()) {
      std::cout << "value:";
      for (const auto& v : value) std::cout << ' ' << v.get<std::string>();
      std::cout << "\n";
    }
  }
  return accepted ? kHolds : kFails;
}

int cmd_gen(const std::string& kind, int base, int dim, const std::string& encoding, const std::string& out) {
  Automaton aut = [&] {
    try {
      EncodingKind enc;
      if (encoding == "parallel") {
        enc = EncodingKind::parallel;
      } else if (encoding == "sequential") {
        enc = EncodingKind::sequential;
      } else {
        throw std::invalid_argument("--encoding must be 'parallel' or 'sequential'");
      }
      return gen_known_rva(parse_known_kind(kind), base, dim, enc);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const std::string text = serialize_automaton(aut);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  return kHolds;
}

int cmd_oracle(const std::string& path, std::size_t bound, std::uint64_t seed, bool complement, const Globals& g) {
  const Automaton aut = load(path, g);
  if (!aut.alphabet().fixed().empty()) throw UsageError("oracle: fixed alphabets are not supported");
  const auto start = std::chrono::steady_clock::now();
  OracleVerdict o;
  if (!complement) o = saturation_oracle_bounded(aut, bound, seed);
  if (o.answer && is_weak(aut)) {
    const std::size_t words = o.words_checked;
    o = complement ? saturation_oracle_complement(aut) : saturation_oracle(aut);
    o.words_checked += words;
  }
  const double ms = elapsed_ms(start);
  if (g.json) {
    json j{{"answer", o.answer},
           {"exact", o.exact},
           {"counterexample",
            o.counterexample ? counterexample_json(*o.counterexample, aut.alphabet(), complement) : json(nullptr)},
           {"stats", {{"states", aut.size()}, {"words", o.words_checked}, {"time_ms", ms}}}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (o.answer ? "saturated" : "not saturated") << (o.exact ? "" : " (bounded)") << " ("
              << o.words_checked << " words, " << ms << " ms)\n";
    if (o.counterexample) print_counterexample(*o.counterexample, aut.alphabet(), complement);
  }
  return o.answer ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether weak deterministic Buchi automata are real vector automata"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--complete-with-sink", g.complete_with_sink, "Route missing transitions to a rejecting sink");

  std::string file, mode, out, word, kind = "full-space", encoding = "parallel";
  int base = 2, dim = 1;
  std::size_t bound = 3;
  std::uint64_t seed = 0;
  bool complement = false;

  auto* classify = app.add_subcommand("classify", "Report weakness and encoding shape");
  classify->add_option("file", file, "Automaton file")->required();

  auto* check = app.add_subcommand("check", "Decide whether the automaton is a real vector automaton");
  check->add_option("file", file, "Automaton file")->required();
  check->add_option("--mode", mode, "parallel|sequential|dim1|complement")
      ->check(CLI::IsMember({"parallel", "sequential", "dim1", "complement"}));

  auto* minimize = app.add_subcommand("minimize", "Minimize a weak automaton and print the morphism classes");
  minimize->add_option("file", file, "Automaton file")->required();
  minimize->add_option("-o,--output", out, "Write the minimal automaton here");

  auto* eval = app.add_subcommand("eval", "Run a lasso word");
  eval->add_option("file", file, "Automaton file")->required();
  eval->add_option("--word", word, "Word '<u> / <v>'")->required();
  eval->add_flag("--complement", complement, "Read values as b-complement");

  auto* gen = app.add_subcommand("gen", "Generate a known real vector automaton");
  gen->add_option("--kind", kind, "full-space|zero-only|unit-box|complement-full")
      ->check(CLI::IsMember({"full-space", "zero-only", "unit-box", "complement-full"}));
  gen->add_option("--base", base, "Base")->check(CLI::Range(2, 16));
  gen->add_option("--dim", dim, "Dimension")->check(CLI::Range(1, 8));
  gen->add_option("--encoding", encoding, "parallel|sequential")
      ->check(CLI::IsMember({"parallel", "sequential"}));
  gen->add_option("-o,--output", out, "Output file");

  auto* oracle = app.add_subcommand("oracle", "Brute-force saturation check");
  oracle->add_option("file", file, "Automaton file")->required();
  oracle->add_option("--bound", bound, "Maximum prefix and period length of enumerated lassos");
  oracle->add_option("--seed", seed, "Sampling seed");
  oracle->add_flag("--complement", complement, "Read the automaton as b-complement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*classify) return cmd_classify(file, g);
    if (*check) return cmd_check(file, mode, g);
    if (*minimize) return cmd_minimize(file, out, g);
    if (*eval) return cmd_eval(file, word, complement, g);
    if (*gen) return cmd_gen(kind, base, dim, encoding, out);
    if (*oracle) return cmd_oracle(file, bound, seed, complement, g);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
