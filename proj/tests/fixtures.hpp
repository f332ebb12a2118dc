#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rva/rva.hpp"

#ifndef RVA_EXAMPLES_DIR
#define RVA_EXAMPLES_DIR "examples"
#endif

namespace fixtures {

using namespace rva;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Automaton load_example(const std::string& name) {
  return parse_automaton(read_file(std::string(RVA_EXAMPLES_DIR) + "/" + name));
}

inline Automaton fig2() { return load_example("fig2.rva"); }
inline Automaton fig4a() { return load_example("fig4a.rva"); }
inline Automaton fig4b() { return load_example("fig4b.rva"); }

/// Builds an automaton from rows of targets (one row per state, letters by index).
inline Automaton table(const AlphabetSpec& al, StateId initial, const std::vector<StateId>& accepting,
                       const std::vector<std::vector<StateId>>& rows) {
  std::vector<StateId> delta;
  for (const auto& r : rows) delta.insert(delta.end(), r.begin(), r.end());
  std::vector<bool> acc(rows.size(), false);
  for (StateId q : accepting) acc[q] = true;
  return Automaton(al, rows.size(), initial, std::move(acc), std::move(delta));
}

/// Base 2, one component: 0* 1 * 0^w. The dual encodings 0* * 1^w of 1 are missing.
inline Automaton only_one_star_zeros() {
  const AlphabetSpec al(2, 1, EncodingKind::parallel);
  // q0 --0--> q0, q0 --1--> a, a --*--> z, z --0--> z (accepting), rest to sink 3.
  return table(al, 0, {2}, {{0, 1, 3}, {3, 3, 2}, {2, 3, 3}, {3, 3, 3}});
}

/// Base 2, one component: 0* 1 * (0^w + 1^w). Every emptiness comparison of the
/// fixed automata agrees, yet the encodings 0* * 1^w of 1 are missing.
inline Automaton ones_or_zeros_after_one() {
  const AlphabetSpec al(2, 1, EncodingKind::parallel);
  // q0 --0--> q0, q0 --1--> a, a --*--> r, r --0--> z0, r --1--> z1,
  // z0 --0--> z0, z1 --1--> z1 (accepting), sink 5.
  return table(al, 0, {3, 4},
               {{0, 1, 5}, {5, 5, 2}, {3, 4, 5}, {3, 5, 5}, {5, 4, 5}, {5, 5, 5}});
}

}  // namespace fixtures
