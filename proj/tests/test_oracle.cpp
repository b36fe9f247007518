#include <doctest.h>

#include "axkatz/oracle.hpp"
#include "support.hpp"

using namespace axkatz;
using V = std::vector<std::uint64_t>;

TEST_CASE("maps Z/2 -> Z/2 by degree") {
  const DegreeBuckets b = functions_by_degree(AbelianShape({2}), AbelianShape({2}));
  CHECK(b.total == 4);
  CHECK(b.buckets.at(ExtendedDegree::minus_infinity()).size() == 1);
  CHECK(b.buckets.at(ExtendedDegree::finite(0)).size() == 1);
  CHECK(b.buckets.at(ExtendedDegree::finite(1)).size() == 2);
  CHECK(b.map_at(b.buckets.at(ExtendedDegree::minus_infinity()).front()).is_zero());
}

TEST_CASE("brute delta on small shapes") {
  CHECK(brute_delta(AbelianShape({4, 2}), AbelianShape({2})) == 4);
  CHECK(brute_delta(AbelianShape({2, 2}), AbelianShape({2})) == 2);
  CHECK(brute_delta(AbelianShape({4}), AbelianShape({4})) == 5);
  CHECK_THROWS_AS(functions_by_degree(AbelianShape({4, 2}), AbelianShape({4}), 1000), ResourceError);
}

TEST_CASE("binomial sum valuations match exact sums") {
  for (std::uint64_t p : {2u, 3u, 5u})
    for (int a = 1; a <= 3; ++a) {
      const auto v = binomial_sum_valuations(Prime(p), a);
      const std::uint64_t q = checked_pow(p, a);
      REQUIRE(v.size() == q);
      for (std::uint64_t n = 0; n < q; ++n) {
        BigInt s = 0;
        for (std::uint64_t x = 0; x < q; ++x) s += testsupport::choose(x, n);
        CHECK(v[n] == testsupport::val(s, p));
      }
    }
}

TEST_CASE("brute Vp matches the direct enumeration") {
  CHECK(brute_Vp(Prime(2), make_partition({2, 1}), BigInt(1)) == 2);
  CHECK(brute_Vp(Prime(2), make_partition({6, 5, 3, 1}), BigInt(18)) == 6);
  for (const std::vector<int>& parts : std::vector<std::vector<int>>{{2, 1}, {3, 1, 1}, {2, 2}}) {
    const auto table = brute_Vp_table(Prime(2), Partition(parts));
    for (std::uint64_t D = 0; D < table.size(); ++D) CHECK(table[D] == testsupport::naive_Vp(2, parts, D));
  }
  CHECK(brute_Vp(Prime(3), make_partition({1, 1}), std::nullopt) == 0);
}

TEST_CASE("brute S minimization") {
  const std::vector<BigInt> L{1, 1, 2}, V2{2};
  CHECK(S_value(L, V2, BigInt(0), 0) == 0);
  CHECK(S_value(L, V2, BigInt(0), 1) == -1);
  const auto [min, s] = brute_smin(L, V2, BigInt(0), 10);
  CHECK(min == -1);
  CHECK(s == 1);
}

TEST_CASE("brute minimum of N") {
  const BruteMinN r = brute_min_N(Prime(2), make_partition({2, 1}), TargetSpec(Prime(2), {{1, 1}}), 3);
  CHECK(r.min == 2);
  CHECK(r.points == 4);
  REQUIRE(r.argmin.size() == 1);
  CHECK((r.argmin[0] == 1 || r.argmin[0] == 2));
}

TEST_CASE("exhaustive verification on Z/4 + Z/2 -> Z/2") {
  const PGroupShape A(Prime(2), make_partition({2, 1}));
  const std::vector<std::pair<AbelianShape, std::uint64_t>> t{{AbelianShape({2}), 1}};
  const VerifyReport r = verify_main_theorem(A, t);
  CHECK(r.pass);
  CHECK(r.bound.bound == 2);
  CHECK(r.qualifying == V{6});
  CHECK(r.min_ord == ExtendedDegree::finite(2));
  REQUIRE(r.witness.size() == 1);
  const ZeroCount z = zero_count(r.witness[0].domain(), r.witness);
  CHECK(z.count == 4);
}

TEST_CASE("sampled verification is reproducible") {
  const PGroupShape A(Prime(2), make_partition({2, 1}));
  const std::vector<std::pair<AbelianShape, std::uint64_t>> t{{AbelianShape({2}), 2}, {AbelianShape({4}), 3}};
  VerifyOptions o;
  o.mode = VerifyMode::sampled;
  o.seed = 42;
  o.samples = 300;
  const VerifyReport a = verify_main_theorem(A, t, o);
  o.exec = Execution::serial;
  const VerifyReport b = verify_main_theorem(A, t, o);
  CHECK(a.pass);
  CHECK(a.min_ord == b.min_ord);
  CHECK(a.witness == b.witness);
  CHECK(a.systems_tested == b.systems_tested);
  CHECK(substream_seed(1, 2) == substream_seed(1, 2));
  CHECK(substream_seed(1, 2) != substream_seed(1, 3));
  CHECK(sample_candidate(AbelianShape({4}), AbelianShape({4}), 3, 9) ==
        sample_candidate(AbelianShape({4}), AbelianShape({4}), 3, 9));
}

TEST_CASE("proof trace on x -> x mod 2") {
  const FiniteMap f(AbelianShape({4}), AbelianShape({2}), {0, 1, 0, 1});
  const std::vector<FiniteMap> sys{f};
  const ProofTrace t = proof_trace(sys, 2u);
  CHECK(t.count == 2);
  CHECK(t.ord_count == ExtendedDegree::finite(1));
  CHECK(t.ord_integral == ExtendedDegree::finite(1));
  CHECK(t.congruent);
  CHECK(t.orders_match);
  CHECK(t.coefficients_ok);
  CHECK(t.indicator_degrees_ok);
  CHECK_THROWS_AS(proof_trace(sys, 1u), ValidationError);
  const ProofTrace def = proof_trace(sys);
  CHECK(def.beta == 2);

  const std::vector<FiniteMap> none{FiniteMap(AbelianShape({4}), AbelianShape({2}), {1, 1, 1, 1})};
  const ProofTrace e = proof_trace(none);
  CHECK(e.empty_zero_set);
  CHECK_FALSE(e.orders_match);
  CHECK(e.congruent);
}

TEST_CASE("polynomial zero counts") {
  PolySystem s;
  s.modulus = 2;
  s.vars = 3;
  s.polys.push_back({2, {{1, {1, 1, 0}}, {1, {0, 0, 1}}}});
  const PolyZeroCount c = poly_zero_count(s);
  CHECK(c.count == 4);
  CHECK(c.ord.at(2) == ExtendedDegree::finite(2));
  CHECK(c.bound.at(2) == 1);
  CHECK(c.holds);

  PolySystem sharp;
  sharp.modulus = 2;
  sharp.vars = 2;
  sharp.polys.push_back({2, {{1, {1, 1}}}});
  const PolyZeroCount c2 = poly_zero_count(sharp);
  CHECK(c2.count == 3);
  CHECK(c2.ord.at(2) == ExtendedDegree::finite(0));
  CHECK(c2.bound.at(2) == 0);

  PolySystem empty;
  empty.modulus = 6;
  empty.vars = 2;
  const PolyZeroCount c3 = poly_zero_count(empty);
  CHECK(c3.count == 36);
  CHECK(c3.holds);

  PolySystem bad = s;
  bad.polys[0].degree = 1;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}
