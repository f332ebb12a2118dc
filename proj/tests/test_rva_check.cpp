#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace rva;

namespace {

Automaton relabel(const Automaton& a, EncodingKind kind) {
  const AlphabetSpec& al = a.alphabet();
  return Automaton(AlphabetSpec(al.base(), al.dim(), kind), a.size(), a.initial(), a.accepting_mask(), a.table());
}

/// Base 2, dimension 1: the single word 1 * 0^omega without leading zeros.
Automaton single_word() {
  const AlphabetSpec al(2, 1, EncodingKind::parallel);
  return fixtures::table(al, 0, {2}, {{3, 1, 3}, {3, 3, 2}, {2, 3, 3}, {3, 3, 3}});
}

/// Complement-full automaton with q0 rerouted on `letter` to `target`.
Automaton complement_variant(int b, LetterIndex letter, StateId target) {
  const Automaton full = gen_known_rva(KnownKind::complement_full, b, 1, EncodingKind::parallel);
  std::vector<StateId> delta = full.table();
  delta[full.initial() * full.letter_count() + letter] = target;
  return Automaton(full.alphabet(), full.size(), full.initial(), full.accepting_mask(), delta);
}

StateId natural_state(const Automaton& complement_full) { return complement_full.step(complement_full.initial(), 0); }

}  // namespace

TEST(CheckParallel, FullSpaceIsSaturated) {
  for (int b : {2, 3}) {
    for (int d : {1, 2, 3}) {
      const Verdict v = check_rva_parallel(gen_known_rva(KnownKind::full_space, b, d, EncodingKind::parallel));
      EXPECT_TRUE(v.answer) << "b=" << b << " d=" << d;
      EXPECT_EQ(v.checked_states, 3u);
    }
  }
  EXPECT_TRUE(check_rva_parallel(fixtures::fig4a()).answer);
}

TEST(CheckParallel, KnownFamilies) {
  for (auto kind : {KnownKind::zero_only, KnownKind::unit_box}) {
    for (int b : {2, 3}) {
      for (int d : {1, 2}) EXPECT_TRUE(check_rva_parallel(gen_known_rva(kind, b, d, EncodingKind::parallel)).answer);
    }
  }
}

TEST(CheckParallel, Figure2BreaksTheZeroLoop) {
  const Verdict v = check_rva_parallel(fixtures::fig2());
  ASSERT_FALSE(v.answer);
  EXPECT_EQ(witness_kind(*v.witness), "zero-loop-broken");
  EXPECT_EQ(std::get<witness::ZeroLoopBroken>(*v.witness).state, 0u);
  EXPECT_EQ(v.checked_states, 5u);
  const auto cx = expand_witness(fixtures::fig2(), v);
  ASSERT_TRUE(cx.has_value());
  EXPECT_TRUE(verify_counterexample(fixtures::fig2(), *cx));
}

TEST(CheckParallel, SingleWordMissesLeadingZeros) {
  const Verdict v = check_rva_parallel(single_word());
  ASSERT_FALSE(v.answer);
  EXPECT_EQ(witness_kind(*v.witness), "zero-loop-broken");
}

TEST(CheckParallel, SingleValueMissesItsDualEncoding) {
  const Automaton a = fixtures::only_one_star_zeros();
  const Verdict v = check_rva_parallel(a);
  ASSERT_FALSE(v.answer);
  const auto& w = std::get<witness::PairMismatch>(*v.witness);
  EXPECT_EQ(w.component, 0);
  EXPECT_EQ(w.state, 0u);
  EXPECT_EQ(to_string(w.letter), "0");
  EXPECT_EQ(to_string(w.incremented), "1");
  const auto cx = expand_witness(a, v);
  ASSERT_TRUE(cx.has_value());
  EXPECT_EQ(cx->kind, "dual");
  EXPECT_TRUE(verify_counterexample(a, *cx));
}

TEST(CheckParallel, NonWeakAndWrongAlphabet) {
  const AlphabetSpec al(2, 1, EncodingKind::parallel);
  const Verdict v = check_rva_parallel(fixtures::table(al, 0, {0}, {{1, 1, 1}, {0, 0, 0}}));
  ASSERT_FALSE(v.answer);
  EXPECT_EQ(witness_kind(*v.witness), "not-weak");
  EXPECT_THROW(check_rva_parallel(fixtures::fig4b()), std::invalid_argument);
}

TEST(CheckParallel, ShapeFailureComesFirst) {
  const AlphabetSpec al(2, 1, EncodingKind::parallel);
  const Automaton everything(al, 1, 0, {true}, {0, 0, 0});
  for (CheckMode mode : {CheckMode::parallel, CheckMode::dim1, CheckMode::complement}) {
    const Verdict v = check_rva(everything, mode);
    ASSERT_FALSE(v.answer);
    EXPECT_EQ(witness_kind(*v.witness), "not-shape");
  }
}

TEST(CheckSequential, FullSpaceIsSaturated) {
  EXPECT_TRUE(check_rva_sequential(fixtures::fig4b()).answer);
  for (int b : {2, 3}) {
    for (int d : {1, 2, 3}) {
      const Verdict v = check_rva_sequential(gen_known_rva(KnownKind::full_space, b, d, EncodingKind::sequential));
      EXPECT_TRUE(v.answer);
      EXPECT_EQ(v.checked_states, static_cast<std::size_t>(d) + 2);
    }
  }
}

TEST(CheckSequential, MutantWithoutOneDigit) {
  const Automaton full = fixtures::fig4b();
  std::vector<StateId> delta = full.table();
  delta[0 * full.letter_count() + 1] = 3;  // q0 reads 1 into the sink.
  const Automaton mutant(full.alphabet(), full.size(), 0, full.accepting_mask(), delta);
  const Verdict v = check_rva_sequential(mutant);
  ASSERT_FALSE(v.answer);
  const OracleVerdict o = saturation_oracle(mutant);
  ASSERT_FALSE(o.answer);
  EXPECT_TRUE(verify_counterexample(mutant, *o.counterexample));
  const auto cx = expand_witness(mutant, v);
  ASSERT_TRUE(cx.has_value());
  EXPECT_TRUE(verify_counterexample(mutant, *cx));
}

TEST(CheckSequential, DimensionOneAgreesWithParallel) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Automaton a = seed % 2 ? gen_random_shaped(3 + seed % 6, 2 + seed % 2, 1, EncodingKind::parallel, seed)
                                 : gen_random_weak(3 + seed % 6, 2 + seed % 2, 1, EncodingKind::parallel, seed);
    const Automaton s = relabel(a, EncodingKind::sequential);
    EXPECT_EQ(check_rva_sequential(s).answer, check_rva_parallel(a).answer) << "seed " << seed;
  }
}

TEST(CheckSequential, RejectsParallelAlphabet) {
  EXPECT_THROW(check_rva_sequential(fixtures::fig4a()), std::invalid_argument);
}

TEST(CheckDim1, Examples) {
  EXPECT_FALSE(check_rva_dim1(fixtures::fig2()).answer);
  EXPECT_TRUE(check_rva_dim1(gen_known_rva(KnownKind::full_space, 3, 1, EncodingKind::parallel)).answer);
  EXPECT_TRUE(check_rva_dim1(gen_known_rva(KnownKind::unit_box, 2, 1, EncodingKind::sequential)).answer);
  const AlphabetSpec al(2, 1, EncodingKind::parallel);
  EXPECT_FALSE(check_rva_dim1(Automaton(al, 1, 0, {true}, {0, 0, 0})).answer);
  EXPECT_THROW(check_rva_dim1(fixtures::fig4a()), std::invalid_argument);
}

TEST(CheckDim1, EmptinessAloneIsIncomplete) {
  // 0*1*(0^omega + 1^omega): every compared pair of fixed states is non-empty,
  // yet 0 * 1^omega, an encoding of 1, is rejected.
  const Automaton a = fixtures::ones_or_zeros_after_one();
  EXPECT_TRUE(check_rva_dim1_emptiness_only(a).answer);
  EXPECT_FALSE(check_rva_dim1(a).answer);
  EXPECT_FALSE(check_rva_parallel(a).answer);
  const OracleVerdict o = saturation_oracle(a);
  ASSERT_FALSE(o.answer);
  EXPECT_TRUE(verify_counterexample(a, *o.counterexample));
}

TEST(CheckDim1, AgreesWithParallel) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int b = 2 + static_cast<int>(seed % 3);
    const Automaton a = seed % 3 ? gen_random_shaped(3 + seed % 8, b, 1, EncodingKind::parallel, seed)
                                 : mutate(gen_known_rva(KnownKind::unit_box, b, 1, EncodingKind::parallel), seed);
    if (!is_weak(a)) continue;
    EXPECT_EQ(check_rva_dim1(a).answer, check_rva_parallel(a).answer) << "seed " << seed;
  }
}

TEST(CheckComplement, FullSpaceIsSaturated) {
  for (int b : {2, 3}) {
    for (int d : {1, 2}) {
      const Automaton a = gen_known_rva(KnownKind::complement_full, b, d, EncodingKind::parallel);
      EXPECT_TRUE(check_rva_complement_parallel(a).answer) << "b=" << b << " d=" << d;
      EXPECT_TRUE(saturation_oracle_complement(a).answer);
    }
  }
}

TEST(CheckComplement, NonNegativeHalfMissesNegativeZero) {
  // Only sign 0 is allowed, so 0 = 1 * 1^omega is rejected.
  const Automaton full = gen_known_rva(KnownKind::complement_full, 2, 1, EncodingKind::parallel);
  const Automaton a = complement_variant(2, 1, 3);
  ASSERT_NE(natural_state(full), 3u);
  const Verdict v = check_rva_complement_parallel(a);
  ASSERT_FALSE(v.answer);
  EXPECT_EQ(witness_kind(*v.witness), "complement-initial-language");
  EXPECT_EQ(std::get<witness::ComplementInitialLanguage>(*v.witness).component, 0);
  const OracleVerdict o = saturation_oracle_complement(a);
  ASSERT_FALSE(o.answer);
  EXPECT_TRUE(verify_counterexample(a, *o.counterexample, true));
  const auto cx = expand_witness(a, v, true);
  ASSERT_TRUE(cx.has_value());
  EXPECT_TRUE(verify_counterexample(a, *cx, true));
}

TEST(CheckComplement, NonSignFirstLetter) {
  const Automaton full = gen_known_rva(KnownKind::complement_full, 3, 1, EncodingKind::parallel);
  const Automaton a = complement_variant(3, 1, natural_state(full));
  const Verdict v = check_rva_complement_parallel(a);
  ASSERT_FALSE(v.answer);
  ASSERT_EQ(witness_kind(*v.witness), "complement-prefix");
  EXPECT_EQ(to_string(std::get<witness::ComplementPrefix>(*v.witness).letter), "1");
  EXPECT_FALSE(saturation_oracle_complement(a).answer);
}

TEST(CheckComplement, SeparatorFirst) {
  const Automaton full = gen_known_rva(KnownKind::complement_full, 2, 1, EncodingKind::parallel);
  const StateId frac = full.step(natural_state(full), full.alphabet().star_index());
  const Automaton a = complement_variant(2, full.alphabet().star_index(), frac);
  const Verdict v = check_rva_complement_parallel(a);
  ASSERT_FALSE(v.answer);
  ASSERT_EQ(witness_kind(*v.witness), "complement-prefix");
  EXPECT_EQ(to_string(std::get<witness::ComplementPrefix>(*v.witness).letter), "*");
}

TEST(CheckComplement, AgreesWithOracle) {
  std::size_t yes = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int b = 2 + static_cast<int>(seed % 2), d = 1 + static_cast<int>(seed % 4 / 2);
    const Automaton a = seed % 2 ? mutate(gen_known_rva(KnownKind::complement_full, b, d, EncodingKind::parallel), seed)
                                 : gen_random_shaped(3 + seed % 5, b, d, EncodingKind::parallel, seed);
    if (!is_weak(a)) continue;
    const Verdict v = check_rva_complement_parallel(a);
    EXPECT_EQ(v.answer, saturation_oracle_complement(a).answer) << "seed " << seed;
    yes += v.answer;
  }
  EXPECT_GT(yes, 0u);
}

TEST(Checks, MinimalityInsensitive) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const bool seq = seed % 2;
    const auto kind = seq ? EncodingKind::sequential : EncodingKind::parallel;
    const Automaton a = gen_random_shaped(3 + seed % 6, 2, 1 + static_cast<int>(seed % 3 == 0), kind, seed);
    const Automaton m = minimize_weak(trim_accessible(a).automaton).target;
    const CheckMode mode = default_mode(a.alphabet());
    const Verdict va = check_rva(a, mode), vm = check_rva(m, mode);
    EXPECT_EQ(va.answer, vm.answer);
    EXPECT_EQ(va.checked_states, vm.checked_states);
    if (va.witness) {
      EXPECT_EQ(witness_kind(*va.witness), witness_kind(*vm.witness));
    }
  }
}

TEST(Checks, Deterministic) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Automaton a = gen_random_shaped(6, 2, 2, EncodingKind::parallel, seed);
    const Verdict v1 = check_rva_parallel(a), v2 = check_rva_parallel(a);
    EXPECT_EQ(v1.answer, v2.answer);
    EXPECT_EQ(verdict_json(v1, 0), verdict_json(v2, 0));
  }
}

TEST(Checks, AgreeWithOracleOnCorpus) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int b = 2 + static_cast<int>(seed % 2), d = 1 + static_cast<int>(seed / 2 % 2);
    const auto kind = seed / 4 % 2 ? EncodingKind::sequential : EncodingKind::parallel;
    const std::size_t n = 3 + seed % 6;
    Automaton a = seed % 3 == 0 ? gen_random_weak(n, b, d, kind, seed) : gen_random_shaped(n, b, d, kind, seed);
    if (seed % 5 == 0) a = mutate(a, seed);
    if (!is_weak(a)) continue;
    const Verdict v = check_rva(a, default_mode(a.alphabet()));
    const OracleVerdict o = saturation_oracle(a);
    EXPECT_EQ(v.answer, o.answer) << "seed " << seed;
    if (!v.answer) {
      const auto cx = expand_witness(a, v);
      ASSERT_TRUE(cx.has_value()) << "seed " << seed;
      EXPECT_TRUE(verify_counterexample(a, *cx)) << "seed " << seed;
    }
  }
}

TEST(Verdicts, AnswerMatchesWitnessPresence) {
  EXPECT_TRUE(static_cast<bool>(Verdict::yes(3)));
  const Verdict no = Verdict::no(witness::ZeroLoopBroken{2}, 4);
  EXPECT_FALSE(static_cast<bool>(no));
  EXPECT_TRUE(no.witness.has_value());
  EXPECT_FALSE(Verdict::yes(1).witness.has_value());
  EXPECT_EQ(parse_check_mode("dim1"), CheckMode::dim1);
  EXPECT_THROW(parse_check_mode("other"), std::invalid_argument);
}
