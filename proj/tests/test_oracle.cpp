#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace rva;

namespace {

LassoWord word(const Automaton& a, const std::string& text) { return parse_word(text, a.alphabet()); }

/// Independent recount: some accepted lasso within the bound is malformed or
/// has a rejected alternative encoding.
bool naive_counterexample_within(const Automaton& a, std::size_t bound) {
  const AlphabetSpec& al = a.alphabet();
  std::vector<std::vector<LetterIndex>> words{{}}, frontier{{}};
  for (std::size_t len = 1; len <= bound; ++len) {
    std::vector<std::vector<LetterIndex>> next;
    for (const auto& w : frontier) {
      for (LetterIndex x = 0; x < al.size(); ++x) {
        auto y = w;
        y.push_back(x);
        next.push_back(y);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = next;
  }
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (v.empty() || !accepts_lasso(a, u, v)) continue;
      LassoWord w;
      for (auto x : u) w.prefix.push_back(al.letter_at(x));
      for (auto x : v) w.period.push_back(al.letter_at(x));
      PairWord pw;
      try {
        pw = from_lasso(w);
        value_real(pw, al);
      } catch (const std::invalid_argument&) {
        return true;
      }
      for (const PairWord& alt : alternative_encodings(pw, al)) {
        if (!accepts_word(a, to_lasso(alt))) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST(Oracle, FullSpaceIsSaturated) {
  EXPECT_TRUE(saturation_oracle(fixtures::fig4a()).answer);
  EXPECT_TRUE(saturation_oracle(fixtures::fig4b()).answer);
  const OracleVerdict bounded = saturation_oracle_bounded(fixtures::fig4a(), 3);
  EXPECT_TRUE(bounded.answer);
  EXPECT_FALSE(bounded.exact);
  EXPECT_GT(bounded.words_checked, 0u);
}

TEST(Oracle, Figure2PaddingPair) {
  const Automaton a = fixtures::fig2();
  const OracleVerdict o = saturation_oracle(a);
  ASSERT_FALSE(o.answer);
  EXPECT_TRUE(o.exact);
  ASSERT_TRUE(o.counterexample->rejected.has_value());
  EXPECT_EQ(o.counterexample->kind, "padding");
  EXPECT_TRUE(verify_counterexample(a, *o.counterexample));
  // The pair quoted for this automaton: 2*0^omega accepted, 02*0^omega rejected.
  const Counterexample quoted{"padding", word(a, "2 * / 0"), word(a, "0 2 * / 0"), ""};
  EXPECT_TRUE(verify_counterexample(a, quoted));
  const OracleVerdict bounded = saturation_oracle_bounded(a, 3);
  EXPECT_FALSE(bounded.answer);
  EXPECT_TRUE(verify_counterexample(a, *bounded.counterexample));
}

TEST(Oracle, SingleValueDualPair) {
  const Automaton a = fixtures::only_one_star_zeros();
  const OracleVerdict o = saturation_oracle(a);
  ASSERT_FALSE(o.answer);
  EXPECT_EQ(o.counterexample->kind, "dual");
  EXPECT_TRUE(verify_counterexample(a, *o.counterexample));
  const Counterexample quoted{"dual", word(a, "1 * / 0"), word(a, "0 * / 1"), ""};
  EXPECT_TRUE(verify_counterexample(a, quoted));
}

TEST(Oracle, VerificationRejectsBogusPairs) {
  const Automaton a = fixtures::only_one_star_zeros();
  // Different values.
  EXPECT_FALSE(verify_counterexample(a, {"dual", word(a, "1 * / 0"), word(a, "1 0 * / 0"), ""}));
  // Both accepted.
  EXPECT_FALSE(verify_counterexample(a, {"padding", word(a, "1 * / 0"), word(a, "0 1 * / 0"), ""}));
  // Well-formed word offered as a shape violation.
  EXPECT_FALSE(verify_counterexample(a, {"shape", word(a, "1 * / 0"), std::nullopt, ""}));
}

TEST(Oracle, ShapeViolations) {
  const AlphabetSpec al(2, 1, EncodingKind::parallel);
  const Automaton no_star = fixtures::table(al, 0, {0}, {{0, 1, 1}, {1, 1, 1}});
  const OracleVerdict o = saturation_oracle(no_star);
  ASSERT_FALSE(o.answer);
  EXPECT_EQ(o.counterexample->kind, "shape");
  EXPECT_EQ(o.counterexample->detail, "no separator");
  const Automaton misaligned = gen_known_rva(KnownKind::full_space, 2, 2, EncodingKind::sequential);
  std::vector<StateId> delta = misaligned.table();
  // Let the block-middle state read a separator into the accepting tail.
  const StateId mid = misaligned.step(0, 0);
  const StateId tail = misaligned.step(0, misaligned.alphabet().star_index());
  delta[mid * misaligned.letter_count() + misaligned.alphabet().star_index()] = tail;
  const Automaton bad(misaligned.alphabet(), misaligned.size(), 0, misaligned.accepting_mask(), delta);
  const OracleVerdict o2 = saturation_oracle(bad);
  ASSERT_FALSE(o2.answer);
  EXPECT_EQ(o2.counterexample->kind, "shape");
  EXPECT_EQ(o2.counterexample->detail, "separator after an incomplete block");
}

TEST(Oracle, RejectsInvalidInput) {
  const AlphabetSpec al(2, 1, EncodingKind::parallel);
  EXPECT_THROW(saturation_oracle(fixtures::table(al, 0, {0}, {{1, 1, 1}, {0, 0, 0}})), std::invalid_argument);
  EXPECT_THROW(saturation_oracle(fix_parallel(fixtures::fig4a(), 0, 0).automaton), std::invalid_argument);
  EXPECT_THROW(saturation_oracle_complement(fixtures::fig4b()), std::invalid_argument);
}

TEST(Oracle, ExactAgreesWithEnumeration) {
  std::size_t counterexamples = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto kind = seed % 2 ? EncodingKind::sequential : EncodingKind::parallel;
    const int d = seed % 4 < 2 ? 1 : 2;
    Automaton a = gen_random_shaped(3 + seed % 3, 2, d, kind, seed);
    if (seed % 3 == 0) a = mutate(a, seed);
    if (!is_weak(a)) continue;
    const OracleVerdict exact = saturation_oracle(a);
    const OracleVerdict bounded = saturation_oracle_bounded(a, 3, seed);
    // Enumeration is one-sided: anything it finds, the exact search finds too.
    if (!bounded.answer) {
      ++counterexamples;
      EXPECT_FALSE(exact.answer) << "seed " << seed;
      EXPECT_TRUE(verify_counterexample(a, *bounded.counterexample)) << "seed " << seed;
    }
    if (!exact.answer) {
      EXPECT_TRUE(verify_counterexample(a, *exact.counterexample)) << "seed " << seed;
    }
  }
  EXPECT_GT(counterexamples, 0u);
}

TEST(Oracle, BoundedYesMeansNoCounterexampleWithinBound) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Automaton a = gen_random_shaped(3 + seed % 3, 2, 1, EncodingKind::parallel, seed);
    if (seed % 2) a = mutate(a, seed);
    if (!is_weak(a)) continue;
    const OracleVerdict bounded = saturation_oracle_bounded(a, 3, seed);
    EXPECT_EQ(bounded.answer, !naive_counterexample_within(a, 3)) << "seed " << seed;
  }
}

TEST(Oracle, ComplementFamilies) {
  const Automaton full = gen_known_rva(KnownKind::complement_full, 2, 2, EncodingKind::parallel);
  EXPECT_TRUE(saturation_oracle_complement(full).answer);
  // Read as plain encodings it misses the empty natural part of 0.
  const OracleVerdict as_plain = saturation_oracle(full);
  ASSERT_FALSE(as_plain.answer);
  EXPECT_EQ(as_plain.counterexample->kind, "padding");
  const Automaton plain = gen_known_rva(KnownKind::full_space, 2, 1, EncodingKind::parallel);
  const OracleVerdict o = saturation_oracle_complement(plain);
  ASSERT_FALSE(o.answer);
  EXPECT_TRUE(verify_counterexample(plain, *o.counterexample, true));
}

TEST(Generators, KnownFamiliesAreSaturated) {
  for (auto kind : {KnownKind::full_space, KnownKind::zero_only, KnownKind::unit_box}) {
    for (auto enc : {EncodingKind::parallel, EncodingKind::sequential}) {
      for (int b : {2, 3}) {
        for (int d : {1, 2, 3}) {
          const Automaton a = gen_known_rva(kind, b, d, enc);
          EXPECT_TRUE(check_rva(a, default_mode(a.alphabet())).answer) << to_string(kind);
          if (d < 3) {
            EXPECT_TRUE(saturation_oracle(a).answer) << to_string(kind);
          }
        }
      }
    }
  }
  EXPECT_EQ(gen_known_rva(KnownKind::full_space, 2, 3, EncodingKind::parallel).size(), 3u);
  EXPECT_EQ(gen_known_rva(KnownKind::full_space, 2, 3, EncodingKind::sequential).size(), 5u);
  EXPECT_THROW(gen_known_rva(KnownKind::complement_full, 2, 1, EncodingKind::sequential), std::invalid_argument);
  EXPECT_EQ(parse_known_kind("unit-box"), KnownKind::unit_box);
  EXPECT_THROW(parse_known_kind("box"), std::invalid_argument);
}

TEST(Generators, ZeroOnlyAcceptsOnlyZero) {
  const Automaton a = gen_known_rva(KnownKind::zero_only, 3, 2, EncodingKind::parallel);
  EXPECT_TRUE(accepts_word(a, word(a, "0,0 * / 0,0")));
  EXPECT_TRUE(accepts_word(a, word(a, "* / 0,0")));
  EXPECT_FALSE(accepts_word(a, word(a, "* / 0,1")));
}

TEST(Generators, UnitBoxBoundaries) {
  const Automaton a = gen_known_rva(KnownKind::unit_box, 2, 1, EncodingKind::parallel);
  EXPECT_TRUE(accepts_word(a, word(a, "0 1 * / 0")));
  EXPECT_TRUE(accepts_word(a, word(a, "* / 1")));
  EXPECT_TRUE(accepts_word(a, word(a, "0 * / 1 0")));
  EXPECT_FALSE(accepts_word(a, word(a, "1 * / 1")));
  EXPECT_FALSE(accepts_word(a, word(a, "1 0 * / 0")));
}

TEST(Generators, RandomAreWeakAndSeeded) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto kind = seed % 2 ? EncodingKind::sequential : EncodingKind::parallel;
    const Automaton a = gen_random_weak(1 + seed % 8, 2, 2, kind, seed);
    EXPECT_TRUE(is_weak(a));
    EXPECT_EQ(serialize_automaton(a), serialize_automaton(gen_random_weak(1 + seed % 8, 2, 2, kind, seed)));
    const Automaton s = gen_random_shaped(3 + seed % 6, 3, 2, kind, seed);
    EXPECT_TRUE(is_weak(s));
    EXPECT_EQ(serialize_automaton(s), serialize_automaton(gen_random_shaped(3 + seed % 6, 3, 2, kind, seed)));
    const Automaton m = mutate(s, seed);
    EXPECT_TRUE(is_weak(m));
    EXPECT_EQ(m.size(), s.size());
    EXPECT_EQ(serialize_automaton(m), serialize_automaton(mutate(s, seed)));
  }
}

TEST(Generators, ResidueFamily) {
  for (std::size_t m : {3u, 5u, 9u, 21u}) {
    const Automaton a = gen_residue_rva(m);
    EXPECT_EQ(a.size(), m + 4);
    EXPECT_TRUE(check_rva_parallel(a).answer);
    EXPECT_TRUE(check_rva_dim1(a).answer);
    EXPECT_EQ(minimize_weak(a).target.size(), a.size());
    if (m <= 9) {
      EXPECT_TRUE(saturation_oracle(a).answer);
    }
  }
  // [k, k+1] with k = 0 mod 3: 3 and 4 are in, 2 is out.
  const Automaton a = gen_residue_rva(3);
  EXPECT_TRUE(accepts_word(a, word(a, "1 1 * / 0")));
  EXPECT_TRUE(accepts_word(a, word(a, "1 0 0 * / 0")));
  EXPECT_TRUE(accepts_word(a, word(a, "1 1 * / 1")));
  EXPECT_FALSE(accepts_word(a, word(a, "1 0 * / 0")));
  EXPECT_FALSE(accepts_word(a, word(a, "1 0 1 * / 0")));
  EXPECT_THROW(gen_residue_rva(4), std::invalid_argument);
  EXPECT_EQ(gen_scaling_rva(20).size(), 19u);
}

TEST(BruteForceEquality, ExamplesAndSymmetry) {
  const Automaton a = fixtures::fig2();
  for (StateId q = 0; q < a.size(); ++q) EXPECT_TRUE(state_lang_equal_bruteforce(a, q, a, q));
  EXPECT_TRUE(state_lang_equal_bruteforce(a, 3, a, 4));
  EXPECT_FALSE(state_lang_equal_bruteforce(a, 0, a, 1));
  for (StateId p = 0; p < a.size(); ++p) {
    for (StateId q = 0; q < a.size(); ++q) {
      EXPECT_EQ(state_lang_equal_bruteforce(a, p, a, q), state_lang_equal_bruteforce(a, q, a, p));
    }
  }
  EXPECT_THROW(state_lang_equal_bruteforce(a, 0, fixtures::fig4a(), 0), std::invalid_argument);
}

TEST(BruteForceEquality, AgreesWithJointEquivalenceOnCorpus) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto kind = seed % 2 ? EncodingKind::sequential : EncodingKind::parallel;
    const Automaton a = gen_random_shaped(3 + seed % 5, 2, 1 + static_cast<int>(seed % 3 == 0), kind, seed);
    const EquivalenceTable t = joint_equivalence(std::vector<Automaton>{a});
    for (StateId p = 0; p < a.size(); ++p) {
      for (StateId q = p; q < a.size(); ++q) {
        EXPECT_EQ(t.equivalent(0, p, 0, q), state_lang_equal_bruteforce(a, p, a, q)) << "seed " << seed;
      }
    }
  }
}

TEST(ComponentDistanceType, Properties) {
  std::mt19937_64 rng(11);
  const int d = 3;
  auto random_word = [&] {
    PairWord w;
    w.stars = {2};
    for (int i = 0; i < 3; ++i) w.prefix.push_back({int(rng() % 2), int(rng() % 2), int(rng() % 2)});
    w.period.push_back({int(rng() % 2), int(rng() % 2), int(rng() % 2)});
    return w;
  };
  for (int t = 0; t < 300; ++t) {
    const PairWord x = random_word(), y = random_word(), z = random_word();
    const auto xy = ComponentDistance::between(x, y, d), yx = ComponentDistance::between(y, x, d);
    const auto yz = ComponentDistance::between(y, z, d), xz = ComponentDistance::between(x, z, d);
    EXPECT_EQ(xy, yx);
    EXPECT_LE(xy.value, static_cast<std::size_t>(d));
    EXPECT_LE(xz.value, xy.value + yz.value);
    EXPECT_EQ(xy.value == 0, normalize(x) == normalize(y));
    EXPECT_EQ(ComponentDistance::between(x, x, d).value, 0u);
  }
}
