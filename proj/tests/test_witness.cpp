#include <doctest.h>

#include <random>

#include "udt/witness.hpp"

using namespace udt;

namespace {

SequenceSpec attacked_pow2() {
  // gamma_n = 1 - 2^-n, delta_n = 2^-n
  return SequenceSpec::geometric(Rational(1), Rational(1, 2), Rational(1), Rational(1, 2));
}

SequenceSpec canonical_gamma_quarter_delta() {
  // gamma_n = 1 - 10^-(n+1), delta_n = 4^-n
  return SequenceSpec::geometric(Rational(1, 10), Rational(1, 10), Rational(1), Rational(1, 4));
}

}  // namespace

TEST_CASE("sequence specs evaluate and validate") {
  SequenceSpec s = canonical_gamma_quarter_delta();
  CHECK(s.gamma(1) == Rational(99, 100));
  CHECK(s.gamma(3) == Rational(1) - pow10(-4));
  CHECK(s.delta(2) == Rational(1, 16));
  CHECK_THROWS_AS(SequenceSpec::geometric(Rational(1), Rational(2), Rational(1), Rational(1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(SequenceSpec::geometric(Rational(3), Rational(1, 2), Rational(1), Rational(1, 2)),
                  std::invalid_argument);
  SequenceSpec tbl = SequenceSpec::table({Rational(1, 2), Rational(3, 4)},
                                         {Rational(1, 4), Rational(1, 8)});
  CHECK(tbl.gamma(2) == Rational(3, 4));
  CHECK_THROWS_AS(tbl.gamma(3), RangeExhausted);
  CHECK_THROWS_AS(SequenceSpec::table({Rational(3, 4), Rational(1, 2)},
                                      {Rational(1, 4), Rational(1, 8)}),
                  std::invalid_argument);
}

TEST_CASE("sequence spec string parsing round-trips") {
  SequenceSpec s = SequenceSpec::parse("geo:1/10:1/10", "geo:1:1/4");
  CHECK(s.gamma(1) == Rational(99, 100));
  CHECK(s.delta(1) == Rational(1, 4));
  CHECK(s.gamma_str() == "geo:1/10:1/10");
  SequenceSpec tbl = SequenceSpec::parse("table:1/2,3/4", "table:1/4,1/8");
  CHECK(tbl.kind() == SequenceSpec::Kind::Table);
  CHECK_THROWS_AS(SequenceSpec::parse("geo:1:1/2", "table:1/4"), std::invalid_argument);
  CHECK_THROWS_AS(SequenceSpec::parse("weird:1", "weird:1"), std::invalid_argument);
  SequenceSpec back = sequence_spec_from_json_string(to_json_string(s));
  CHECK(back.gamma(4) == s.gamma(4));
  CHECK(back.delta(4) == s.delta(4));
}

TEST_CASE("delta coarsening follows the canonical grid") {
  // gamma~_n = 1-2^-n, delta~_n = 4^-n; for n=1 the qualifying indices are
  // n' <= 6, so delta_1 = 4^-6
  SequenceSpec fine = SequenceSpec::geometric(Rational(1), Rational(1, 2), Rational(1),
                                              Rational(1, 4));
  std::vector<Rational> d = derive_coarse_deltas(fine, 3);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == rat_pow(Rational(1, 4), 6));
  for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] <= d[i - 1]);
}

TEST_CASE("delta coarsening with a constant delta table") {
  SequenceSpec fine = SequenceSpec::table(
      {Rational(1, 2), Rational(3, 4), Rational(995, 1000), Rational(9999, 10000)},
      {Rational(1, 8), Rational(1, 8), Rational(1, 8), Rational(1, 8)});
  std::vector<Rational> d = derive_coarse_deltas(fine, 1);
  CHECK(d[0] == Rational(1, 8));
}

TEST_CASE("delta coarsening reports range exhaustion") {
  // gamma~_1 already above 1 - 10^-2: no qualifying index at all
  SequenceSpec high = SequenceSpec::geometric(Rational(1, 1000), Rational(1, 2), Rational(1),
                                              Rational(1, 2));
  CHECK_THROWS_AS(derive_coarse_deltas(high, 1), RangeExhausted);
  // table too short: every entry qualifies, the true minimum is not represented
  SequenceSpec shallow = SequenceSpec::table({Rational(1, 2), Rational(2, 3)},
                                             {Rational(1, 2), Rational(1, 4)});
  CHECK_THROWS_AS(derive_coarse_deltas(shallow, 1), RangeExhausted);
}

TEST_CASE("direct attack with slow gamma reports the vacuous level") {
  // gamma_1 = 1/2 <= 1 - 2 alpha_1 = 4/5: not certifiable at matched depth
  CHECK_THROWS_AS(find_non_udt_witness(attacked_pow2(), 1, pow2(-20)), NotCertifiable);
}

TEST_CASE("three-level witness against the canonical pair") {
  SequenceSpec seq = canonical_gamma_quarter_delta();
  WitnessCertificate cert = find_non_udt_witness(seq, 3, pow2(-40));
  REQUIRE(cert.levels.size() == 3);

  SUBCASE("level 1 matches the hand computation") {
    const WitnessLevel& l1 = cert.levels[0];
    CHECK(l1.n == 2);
    CHECK(l1.address == Address({2}));
    CHECK(l1.x == Rational(1, 4));
    CHECK(l1.r_x == Rational(1, 16));
    CHECK(l1.density_hi == Rational(4, 5));
    CHECK(l1.density_hi < l1.gamma);
  }

  SUBCASE("levels nest with strictly shrinking intervals") {
    for (std::size_t i = 1; i < cert.levels.size(); ++i) {
      const Interval& outer = cert.levels[i - 1].interval;
      const Interval& inner = cert.levels[i].interval;
      CHECK(outer.lo < inner.lo);
      CHECK(inner.hi < outer.hi);
      CHECK(2 * inner.length() <= outer.length());
    }
    CHECK(cert.enclosure == cert.levels.back().interval);
  }

  SUBCASE("r_x < delta_k and density_hi < gamma_k per level") {
    for (const auto& lv : cert.levels) {
      CHECK(lv.r_x < lv.delta);
      CHECK(lv.density_hi < lv.gamma);
    }
  }

  SUBCASE("the verifier re-derives every inequality") {
    VerifyReport rep = verify_non_udt_witness(cert);
    for (const auto& line : rep.lines) INFO(line);
    CHECK(rep.ok);
  }

  SUBCASE("chosen indices are invariant under refinement") {
    WitnessCertificate finer = find_non_udt_witness(seq, 3, pow2(-60));
    REQUIRE(finer.levels.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(finer.levels[i].n == cert.levels[i].n);
      CHECK(finer.levels[i].address == cert.levels[i].address);
    }
  }

  SUBCASE("certificates survive the JSON round trip and tampering is caught") {
    WitnessCertificate back = witness_certificate_from_json_string(to_json_string(cert));
    CHECK(verify_non_udt_witness(back).ok);
    back.levels[1].density_hi = back.levels[1].gamma;  // no longer < gamma
    CHECK_FALSE(verify_non_udt_witness(back).ok);
    WitnessCertificate moved = cert;
    moved.levels[2].x += pow2(-80);
    CHECK_FALSE(verify_non_udt_witness(moved).ok);
  }
}

TEST_CASE("a too-coarse truncation is an explicit error, never a silent pass") {
  SequenceSpec seq = canonical_gamma_quarter_delta();
  CHECK_THROWS_AS(find_non_udt_witness(seq, 1, Rational(1, 2)), NeedsFinerEps);
}

TEST_CASE("non-sudt base case constants") {
  CHECK(delta_prime(1) == pow2(-100));
  CHECK(gamma_prime(1) == Rational(1, 2));
  CHECK(r_value(Address(std::vector<std::int64_t>(10, 1))) == pow2(-47));
  CHECK(pow2(-100) < pow2(-47));
  CHECK(Rational(1, 2) < Rational(1) - 384 * alpha(10));
}

TEST_CASE("non-sudt witness against gamma_n = 1-2^-n, delta_n = 2^-n") {
  SudtCertificate cert = find_non_sudt_witness(attacked_pow2(), 3);
  REQUIRE(cert.steps.size() == 3);

  SUBCASE("the worked selections") {
    CHECK(cert.steps[0].k_prime == 10);
    CHECK(cert.steps[0].m_prime == 1);
    CHECK(cert.steps[0].m == 42);
    CHECK(cert.steps[0].n_next == 1);
    CHECK(cert.steps[0].i == 1);
    CHECK(cert.steps[1].k_prime == 11);
    CHECK(cert.steps[1].m_prime == 2);
    CHECK(cert.steps[1].m > 42);
  }

  SUBCASE("m_1 = 42 is pinned by the exact comparison against 10^-12/4") {
    Rational margin = pow10(-12) / 4;
    CHECK(pow2(-42) < margin);
    CHECK(margin <= pow2(-41));
  }

  SUBCASE("every recorded inequality re-checks") {
    VerifyReport rep = verify_non_sudt_witness(cert);
    for (const auto& line : rep.lines) INFO(line);
    CHECK(rep.ok);
  }

  SUBCASE("JSON round trip and tamper detection") {
    SudtCertificate back = sudt_certificate_from_json_string(to_json_string(cert));
    CHECK(verify_non_sudt_witness(back).ok);
    back.chain[10] = 7;  // no longer the recorded n'_{11}
    CHECK_FALSE(verify_non_sudt_witness(back).ok);
  }

  SUBCASE("the enclosure is the deepest materialized K interval") {
    CHECK(cert.enclosure == k_interval(Address(cert.chain)));
    CHECK(cert.enclosure.length() == r_value(Address(cert.chain)));
  }
}

TEST_CASE("non-sudt witness respects table exhaustion") {
  SequenceSpec tiny = SequenceSpec::table({Rational(1, 2)}, {Rational(1, 4)});
  CHECK_THROWS_AS(find_non_sudt_witness(tiny, 1), RangeExhausted);
}

TEST_CASE("sudt deltas for finite unions") {
  SequenceSpec gammas = SequenceSpec::geometric(Rational(1), Rational(1, 10), Rational(1),
                                                Rational(1, 2));
  SUBCASE("single interval") {
    IntervalSet s(Interval::closed(Rational(0), Rational(1)));
    SudtFiniteCertificate cert = sudt_deltas_finite_union(s, gammas, 4);
    CHECK(cert.min_component_length == 1);
    CHECK(cert.deltas == std::vector<Rational>(4, Rational(1)));
    REQUIRE(cert.endpoint_checks.size() == 2);
    for (const auto& ec : cert.endpoint_checks) CHECK(ec.result == Tri::Yes);
    CHECK(cert.endpoint_checks[0].x == 0);
    CHECK(cert.endpoint_checks[1].x == 1);
  }
  SUBCASE("two components take the smaller length") {
    IntervalSet s = IntervalSet::normalize({Interval::closed(Rational(0), Rational(1, 4)),
                                            Interval::closed(Rational(1, 2), Rational(1))});
    SudtFiniteCertificate cert = sudt_deltas_finite_union(s, gammas, 3);
    CHECK(cert.min_component_length == Rational(1, 4));
    for (const auto& ec : cert.endpoint_checks) CHECK(ec.result == Tri::Yes);
  }
  SUBCASE("component lengths 1/8 and 1/2 certify at gamma = 1 - 10^-6") {
    IntervalSet s = IntervalSet::normalize({Interval::closed(Rational(0), Rational(1, 8)),
                                            Interval::closed(Rational(1, 4), Rational(3, 4))});
    SudtFiniteCertificate cert = sudt_deltas_finite_union(s, gammas, 6);
    CHECK(gammas.gamma(6) == Rational(1) - pow10(-6));
    CHECK(cert.min_component_length == Rational(1, 8));
    for (const auto& ec : cert.endpoint_checks) CHECK(ec.result == Tri::Yes);
  }
  SUBCASE("degenerate components are rejected") {
    IntervalSet s = IntervalSet::normalize({Interval::closed(Rational(0), Rational(0)),
                                            Interval::closed(Rational(1, 2), Rational(1))});
    CHECK_THROWS_AS(sudt_deltas_finite_union(s, gammas, 2), std::invalid_argument);
    CHECK_THROWS_AS(sudt_deltas_finite_union(IntervalSet(), gammas, 2), std::invalid_argument);
  }
}

TEST_CASE("the 1/16 sparsity identity") {
  CHECK(abar_sparsity_check(Address({1})) == Rational(1, 16));
  CHECK(abar_sparsity_check(Address({3, 2})) == Rational(1, 16));
  std::mt19937 gen(41);
  std::uniform_int_distribution<int> depth_d(1, 4);
  std::uniform_int_distribution<std::int64_t> index_d(1, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int64_t> ix;
    int d = depth_d(gen);
    for (int i = 0; i < d; ++i) ix.push_back(index_d(gen));
    Address u(ix);
    CHECK(abar_sparsity_check(u) == Rational(1, 16));
    CHECK(a_value(child(u, 1)) - a_value(parent_successor(u)) == pow2(-4) * r_value(u));
  }
}
