#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "exlarge/curated.hpp"
#include "exlarge/jump.hpp"
#include "exlarge/machine.hpp"
#include "exlarge/pairing.hpp"

using namespace exlarge;

namespace {

const Natural eH = encode_program({Instr::halt()});

Program random_program(std::mt19937_64& rng, std::size_t max_len) {
  Program p;
  std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    auto r = static_cast<std::uint8_t>(rng() % kRegisters);
    switch (rng() % 5) {
      case 0: p.push_back(Instr::halt()); break;
      case 1: p.push_back(Instr::inc(r)); break;
      case 2: p.push_back(Instr::dec(r)); break;
      case 3: p.push_back(Instr::query(r)); break;
      default: p.push_back(Instr::jz(r, static_cast<std::int64_t>(rng() % 7) - 3)); break;
    }
  }
  return p;
}

FinSet random_set(std::mt19937_64& rng, Natural below) {
  std::vector<Natural> v;
  for (Natural x = 0; x < below; ++x)
    if (rng() % 3 == 0) v.push_back(x);
  return FinSet(v);
}

}  // namespace

TEST(Pairing, Examples) {
  EXPECT_EQ(pair(0, 0), 0u);
  EXPECT_EQ(pair(1, 0), 1u);
  EXPECT_EQ(pair(0, 1), 2u);
  // Cantor form: the diagonal x + y = 2 starts at T(2) = 3.
  EXPECT_EQ(pair(1, 1), 4u);
  EXPECT_EQ(pair(2, 0), 3u);
}

TEST(Pairing, RoundTrip) {
  for (Natural x = 0; x < 1000; ++x)
    for (Natural y = 0; y < 1000; ++y) {
      auto [a, b] = unpair(pair(x, y));
      ASSERT_EQ(a, x);
      ASSERT_EQ(b, y);
    }
  for (Natural n = 0; n < 100000; ++n) ASSERT_EQ(std::apply(pair, unpair(n)), n);
}

TEST(Encoding, Examples) {
  EXPECT_EQ(eH, 1u);
  EXPECT_EQ(decode_program(eH), (Program{Instr::halt()}));
  EXPECT_TRUE(decode_program(0).empty());
  EXPECT_EQ(encode_program({}), 0u);
  // QUERY 0 has code 9, JZ 0 0 code 13, HALT code 0: bits 9, 9+13+1, 23+0+1.
  EXPECT_EQ(encode_program(membership_program()), (Natural{1} << 9) + (Natural{1} << 23) + (Natural{1} << 24));
}

TEST(Encoding, RandomRoundTrip) {
  std::mt19937_64 rng(11);
  int done = 0;
  while (done < 10000) {
    Program p = random_program(rng, 5);
    Natural e;
    try {
      e = encode_program(p);
    } catch (const std::overflow_error&) {
      continue;  // index needs more than 64 bits
    }
    ASSERT_EQ(decode_program(e), p) << format_program(p);
    ++done;
  }
  for (Natural e = 0; e < 100000; ++e) ASSERT_EQ(encode_program(decode_program(e)), e);
}

TEST(Encoding, OverflowThrows) {
  Program p(70, Instr::inc(0));
  EXPECT_THROW(encode_program(p), std::overflow_error);
}

TEST(ProgramText, RoundTrip) {
  Program p{Instr::inc(0), Instr::dec(2), Instr::jz(1, -3), Instr::query(0), Instr::halt()};
  EXPECT_EQ(format_program(p), "INC 0\nDEC 2\nJZ 1 -3\nQUERY 0\nHALT\n");
  EXPECT_EQ(parse_program(format_program(p)), p);
  EXPECT_EQ(parse_program("  inc 0  # comment\n\nhalt"), (Program{Instr::inc(0), Instr::halt()}));
  EXPECT_THROW(parse_program("INC 4"), std::invalid_argument);
  EXPECT_THROW(parse_program("JUMP 0"), std::invalid_argument);
}

TEST(ProgramText, UniverseFileMatchesBuiltin) {
  std::ifstream in(EXLARGE_DATA_DIR "/curated16.prog");
  ASSERT_TRUE(in.good());
  EXPECT_EQ(parse_universe(in), curated_universe());
  std::istringstream again(format_universe(curated_universe()));
  EXPECT_EQ(parse_universe(again), curated_universe());
}

TEST(RunBounded, Examples) {
  ExplicitOracle none{FinSet{}};
  for (Natural s = 2; s < 50; ++s) {
    RunOutcome r = run_bounded(eH, none, 0, s);
    EXPECT_TRUE(r.halted);
    EXPECT_EQ(r.value, 0u);
  }
  EXPECT_FALSE(run_bounded(eH, none, 0, 1).halted);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) EXPECT_FALSE(run_bounded(rng() % 1000, none, rng() % 5, 0).halted);
  EXPECT_FALSE(run_bounded(0, none, 0, 1000).halted);
}

TEST(RunBounded, UseBound) {
  // INC 0 three times then HALT: value 3 needs s > 3 and 4 steps need s > 4.
  Program p{Instr::inc(0), Instr::inc(0), Instr::inc(0), Instr::halt()};
  Natural e = encode_program(p);
  ExplicitOracle none{FinSet{}};
  StandardNumbering nb;
  EXPECT_FALSE(run_program(p, 0, none, 0, 4).halted);
  EXPECT_TRUE(run_program(p, 0, none, 0, 5).halted);
  EXPECT_EQ(run_program(p, 0, none, 0, 5).value, 3u);
  EXPECT_FALSE(run_bounded(e, none, 0, e).halted);
  EXPECT_TRUE(run_bounded(e, none, 0, e + 1, nb).halted);
}

TEST(RunBounded, QueryAndJoin) {
  Program p{Instr::query(0), Instr::halt()};
  ExplicitOracle x{FinSet{3, 5}};
  EXPECT_EQ(run_program(p, 0, x, 3, 10).value, 1u);
  EXPECT_EQ(run_program(p, 0, x, 4, 10).value, 0u);
  auto j = join(explicit_oracle(FinSet{1}), explicit_oracle(FinSet{0, 2}));
  EXPECT_TRUE(j->contains(2));   // 1 in A
  EXPECT_FALSE(j->contains(0));  // 0 not in A
  EXPECT_TRUE(j->contains(1));   // 0 in B
  EXPECT_TRUE(j->contains(5));   // 2 in B
  EXPECT_FALSE(j->contains(3));
}

TEST(RunBounded, MonotoneAndLocal) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    Natural e = rng() % 4000;
    FinSet x = random_set(rng, 60);
    Natural in = rng() % 6;
    Natural s = rng() % 60;
    ExplicitOracle xo(x);
    RunOutcome a = run_bounded(e, xo, in, s);
    ExplicitOracle local(x.below(s));
    RunOutcome l = run_bounded(e, local, in, s);
    ASSERT_EQ(a.halted, l.halted);
    ASSERT_EQ(a.value, l.value);
    if (a.halted) {
      ASSERT_LT(a.steps_used, s);
      ASSERT_LT(a.max_value_seen, s);
      RunOutcome b = run_bounded(e, xo, in, s + 1 + rng() % 20);
      ASSERT_TRUE(b.halted);
      ASSERT_EQ(b.value, a.value);
    }
  }
}

TEST(GLimit, Examples) {
  ExplicitOracle none{FinSet{}};
  EXPECT_EQ(g_limit(eH, eH, 0, 0, none), 0u);
  // Clears r0, then answers whether 5 is in the oracle. Long programs have huge standard
  // indices, so it is placed at index 2 of a small curated list.
  Program five{Instr::jz(0, 3), Instr::dec(0), Instr::jz(3, -2)};
  for (int i = 0; i < 5; ++i) five.push_back(Instr::inc(0));
  five.push_back(Instr::query(0));
  five.push_back(Instr::halt());
  CuratedNumbering nb({Program{}, Program{Instr::halt()}, five});
  // Program 0 halts nowhere, so its stage domain is empty.
  for (Natural x : {0, 3, 7}) EXPECT_EQ(g_limit(0, 2, 200, x, none, nb), 0u);
  // Program 1 halts everywhere, so 5 is in its stage domain once the stage passes 5.
  ExplicitOracle everything(FinSet::interval(0, 1000));
  for (Natural s : {200, 400})
    for (Natural x : {0, 3, 7}) {
      EXPECT_EQ(g_limit(1, 2, s, x, none, nb), 1u);
      EXPECT_EQ(run_bounded(2, everything, x, s, nb).value, 1u);
    }
}

TEST(PairJump, Examples) {
  ExplicitOracle none{FinSet{}};
  EXPECT_TRUE(jump_pairs_approx(none, 0).empty());
  EXPECT_FALSE(jump_pairs_approx(none, 2).contains(pair(0, eH)));
  for (Natural s = 3; s < 40; ++s) EXPECT_TRUE(jump_pairs_approx(none, s).contains(pair(0, eH))) << s;
  for (Natural s = 0; s <= 64; ++s) EXPECT_TRUE(jump_pairs_approx(none, s).is_subset_of(jump_pairs_approx(none, s + 1)));
}

TEST(PairJump, MemberAgreesWithApprox) {
  ExplicitOracle x{FinSet{1, 4, 6}};
  for (Natural s : {5, 12, 20}) {
    FinSet a = jump_pairs_approx(x, s);
    for (Natural e = 0; e + 1 < s; ++e)
      for (Natural m = 0; m + 1 < s; ++m) EXPECT_EQ(a.contains(pair(m, e)), jump_pairs_member(x, pair(m, e), s));
  }
}

TEST(StagedJump, Examples) {
  ExplicitOracle none{FinSet{}};
  EXPECT_EQ(staged_jump(none, {{9}}), jump_pairs_approx(none, 9));
  EXPECT_TRUE(staged_jump(none, {{0, 0}}).empty());
  EXPECT_THROW(staged_jump(none, {{}}), std::invalid_argument);
}

TEST(StagedJump, TwoStagesUnrolled) {
  ExplicitOracle none{FinSet{}};
  std::vector<Natural> inner;
  for (Natural e = 0; e < 7; ++e)
    for (Natural m = 0; m < 7; ++m)
      if (run_bounded(e, none, m, 7).halted) inner.push_back(pair(m, e));
  ExplicitOracle level1(FinSet::from_unsorted(inner));
  std::vector<Natural> outer;
  for (Natural e = 0; e < 15; ++e)
    for (Natural m = 0; m < 15; ++m)
      if (run_bounded(e, level1, m, 15).halted) outer.push_back(pair(m, e));
  EXPECT_EQ(staged_jump(none, {{8, 16}}), FinSet::from_unsorted(outer));
}

TEST(StagedJump, BelowIsRestriction) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    FinSet x = random_set(rng, 12);
    ExplicitOracle xo(x);
    std::vector<Natural> st;
    std::size_t k = 1 + rng() % 3;
    for (std::size_t j = 0; j < k; ++j) st.push_back(4 + rng() % 20);
    Natural bound = rng() % 30;
    EXPECT_EQ(staged_jump_below(xo, {st}, bound), staged_jump(xo, {st}).below(bound)) << format_stages({st});
  }
}

TEST(StagedJump, StageText) {
  EXPECT_EQ(format_stages({{8, 16}}), "8,16");
  EXPECT_EQ(parse_stages("8, 16").stages, (std::vector<Natural>{8, 16}));
  EXPECT_THROW(parse_stages("8,,16"), std::invalid_argument);
}

TEST(Halt0Jump, Examples) {
  auto none = empty_oracle();
  for (Natural c = 3; c < 20; ++c) EXPECT_TRUE(jump_halt0(none, c)->contains(eH));
  EXPECT_FALSE(jump_halt0(none, 1)->contains(eH));
  for (Natural c : {1, 10, 1000000}) EXPECT_FALSE(jump_halt0(none, c)->contains(0));
  EXPECT_THROW(jump_halt0(none, 0), std::invalid_argument);
  for (Natural e = 0; e < 300; ++e)
    if (jump_halt0(none, 50)->contains(e)) EXPECT_TRUE(jump_halt0(none, 51)->contains(e));
}

TEST(Reduction, Identity) {
  for (Natural m = 0; m < 20; ++m) {
    EXPECT_EQ(mone_reduction(3, 3, m, JumpFlavor::PairJump), m);
    EXPECT_EQ(mone_reduction(0, 0, m, JumpFlavor::Halt0Jump), m);
  }
  EXPECT_THROW(mone_reduction(2, 1, 0, JumpFlavor::PairJump), std::invalid_argument);
}

TEST(Reduction, PairFlavor) {
  ExplicitOracle x{FinSet{3, 5}};
  const Natural q = encode_program(membership_program());
  for (Natural m = 0; m <= 8; ++m) {
    Natural f = mone_reduction(0, 1, m, JumpFlavor::PairJump);
    EXPECT_EQ(f, pair(m, q));
    EXPECT_EQ(jump_pairs_member(x, f, q + 20), x.contains(m)) << m;
  }
}

TEST(Reduction, Halt0Flavor) {
  auto x = explicit_oracle(FinSet{3});
  Natural f3 = mone_reduction(0, 1, 3, JumpFlavor::Halt0Jump);
  // f(0) has the smallest index among the non-members, so its non-halting run is the shortest.
  Natural f0 = mone_reduction(0, 1, 0, JumpFlavor::Halt0Jump);
  EXPECT_TRUE(jump_halt0(x, f3 + 10)->contains(f3));
  EXPECT_FALSE(jump_halt0(x, f0 + 10)->contains(f0));
  EXPECT_THROW(mone_reduction(0, 2, 100, JumpFlavor::Halt0Jump), std::overflow_error);
}

TEST(Curated, GroundTruthAndGap) {
  auto nb = curated_numbering();
  ExplicitOracle none{FinSet{}};
  std::vector<Natural> halting;
  for (Natural e = 0; e < 16; ++e) {
    RunOutcome big = run_bounded(e, none, 0, 1000000, *nb);
    if (big.halted) {
      halting.push_back(e);
      EXPECT_LT(big.steps_used, 1000u) << e;
    }
  }
  EXPECT_EQ(halting, (std::vector<Natural>{1, 2, 3, 4, 5, 6, 11, 15}));
}

TEST(Curated, OracleDependence) {
  auto nb = curated_numbering();
  auto halts = [&](Natural e, FinSet x) { return run_bounded(e, ExplicitOracle(x), 0, 1000000, *nb).halted; };
  EXPECT_TRUE(halts(8, {1}));
  EXPECT_TRUE(halts(9, {7}));
  EXPECT_TRUE(halts(10, {3}));
  EXPECT_FALSE(halts(11, {7}));
  EXPECT_TRUE(halts(12, {4, 6}));
  EXPECT_FALSE(halts(12, {4}));
  EXPECT_TRUE(halts(13, {2}));
  EXPECT_TRUE(halts(14, {0}));
  EXPECT_FALSE(halts(15, {9}));
  // Program i never looks at numbers >= i.
  for (Natural e = 0; e < 16; ++e)
    for (Natural y = e; y < 20; ++y) EXPECT_EQ(halts(e, {}), halts(e, {y})) << e << " " << y;
  // Indices past the list fall back to the standard numbering.
  EXPECT_EQ(nb->program(16 + eH), (Program{Instr::halt()}));
}
