#include <doctest.h>

#include <random>

#include "axkatz/calculus.hpp"
#include "support.hpp"

using namespace axkatz;
using V = std::vector<std::uint64_t>;

namespace {

FiniteMap map_of(V domain, V codomain, V values) {
  return FiniteMap(AbelianShape(std::move(domain)), AbelianShape(std::move(codomain)), std::move(values));
}

// Degree of a single-coordinate p-group map from the test oracle, encoded like
// ExtendedDegree.
ExtendedDegree oracle_degree(const FiniteMap& f) {
  std::optional<std::uint64_t> best;
  for (std::size_t c = 0; c < f.codomain().rank(); ++c) {
    const auto d = testsupport::naive_fdeg(f.domain().factors(), f.codomain().factors()[c], f.coordinate(c));
    if (d && (!best || *d > *best)) best = d;
  }
  return best ? ExtendedDegree::finite(*best) : ExtendedDegree::minus_infinity();
}

}  // namespace

TEST_CASE("differences") {
  const FiniteMap id2 = map_of({2}, {2}, {0, 1});
  CHECK(difference(id2, V{1}) == map_of({2}, {2}, {1, 1}));
  CHECK(difference(map_of({3}, {5}, {4, 4, 4}), V{1}).is_zero());
  const FiniteMap id4 = map_of({4}, {4}, {0, 1, 2, 3});
  CHECK(iterated_difference(id4, V{2}).is_zero());
  CHECK(iterated_difference(id4, V{0}) == id4);
  CHECK(iterated_difference(id2, V{1}) == map_of({2}, {2}, {1, 1}));
}

TEST_CASE("functional degree examples") {
  CHECK(functional_degree(FiniteMap::zero(AbelianShape({4, 2}), AbelianShape({2}))) ==
        ExtendedDegree::minus_infinity());
  CHECK(functional_degree(map_of({4, 2}, {4}, V(8, 3))) == ExtendedDegree::finite(0));
  CHECK(functional_degree(map_of({2}, {3}, {0, 1})) == ExtendedDegree::infinity());
  for (std::uint64_t p : {2u, 3u}) {
    // x_1^{p-1} x_2^{p-1} on (Z/p)^2 has degree 2(p-1).
    const FiniteMap f = FiniteMap::from_function(AbelianShape({p, p}), AbelianShape({p}), [&](const GroupElement& x) {
      std::uint64_t v = 1;
      for (std::uint64_t xi : x)
        for (std::uint64_t e = 0; e + 1 < p; ++e) v = v * xi % p;
      return GroupElement{v};
    });
    CHECK(functional_degree(f) == ExtendedDegree::finite(2 * (p - 1)));
  }
}

TEST_CASE("functional degree matches the naive difference search") {
  std::mt19937_64 rng(11);
  const std::vector<std::pair<V, V>> shapes = {{{4, 2}, {2}}, {{8}, {4}}, {{9}, {3}},
                                               {{3, 3}, {9}}, {{4}, {2, 4}}, {{2, 2, 2}, {2}}};
  for (const auto& [dom, cod] : shapes) {
    const AbelianShape A(dom), B(cod);
    for (int trial = 0; trial < 40; ++trial) {
      V values;
      for (std::uint64_t x = 0; x < A.order(); ++x)
        for (std::uint64_t m : cod) values.push_back(rng() % m);
      const FiniteMap f(A, B, values);
      CHECK(functional_degree(f) == oracle_degree(f));
    }
  }
}

TEST_CASE("mixed-prime maps factor through primary components") {
  // Z/6 -> Z/6, x -> 5x + 1 is affine, so degree 1.
  const FiniteMap affine = FiniteMap::from_function(AbelianShape({6}), AbelianShape({6}),
                                                    [](const GroupElement& x) { return GroupElement{(5 * x[0] + 1) % 6}; });
  CHECK(functional_degree(affine) == ExtendedDegree::finite(1));
  std::map<std::uint64_t, FiniteMap> parts;
  REQUIRE(primary_parts(affine, parts));
  CHECK(parts.size() == 2);
  CHECK(assemble_primary(affine.domain(), affine.codomain(), parts) == affine);
  // x -> x^2 mod 6 still factors: its 2-part depends on x mod 2, its 3-part on x mod 3.
  const FiniteMap square = FiniteMap::from_function(AbelianShape({6}), AbelianShape({6}),
                                                    [](const GroupElement& x) { return GroupElement{x[0] * x[0] % 6}; });
  CHECK(functional_degree(square).is_finite());
  // An indicator of {0} in Z/6 landing in Z/2 depends on the 3-part of x.
  const FiniteMap mixed = map_of({6}, {2}, {1, 0, 0, 0, 0, 0});
  CHECK(functional_degree(mixed) == ExtendedDegree::infinity());
}

TEST_CASE("series coefficients examples") {
  const auto s = series_coefficients(map_of({2}, {4}, {1, 3}));
  REQUIRE(s.coeffs.size() == 2);
  CHECK(s.coeffs.at(MultiIndex{0}) == GroupElement{1});
  CHECK(s.coeffs.at(MultiIndex{1}) == GroupElement{2});
  const auto id = series_coefficients(map_of({2}, {2}, {0, 1}));
  REQUIRE(id.coeffs.size() == 1);
  CHECK(id.coeffs.at(MultiIndex{1}) == GroupElement{1});
  CHECK(reconstruct(id, 1) == map_of({2}, {2}, {0, 1}));
  CHECK_THROWS_AS(reconstruct(id, 0), ValidationError);
  CHECK(series_coefficients(FiniteMap::zero(AbelianShape({4}), AbelianShape({2}))).coeffs.empty());
  CHECK_THROWS_AS(series_coefficients(map_of({2}, {3}, {0, 1})), UnsupportedError);
}

TEST_CASE("series roundtrip on random maps Z/4+Z/2 -> Z/4") {
  std::mt19937_64 rng(5);
  const AbelianShape A({4, 2}), B({4});
  for (int trial = 0; trial < 50; ++trial) {
    const FiniteMap f(A, B, testsupport::random_table(rng, 8, 4));
    const auto s = series_coefficients(f);
    CHECK(reconstruct(s, s.degree_bound) == f);
    // Each coefficient is the iterated difference at 0.
    for (const auto& [n, c] : s.coeffs) {
      const FiniteMap d = iterated_difference(f, n);
      CHECK(GroupElement(d.at_index(0).begin(), d.at_index(0).end()) == c);
    }
  }
}

TEST_CASE("integer series and lifts") {
  IntSeries F(1, 3);
  F.set({1}, 1);
  CHECK(F.degree() == ExtendedDegree::finite(1));
  CHECK(integral(F, V{4}) == 6);
  F.set({1}, 0);
  CHECK(F.coeffs().empty());
  CHECK(F.degree() == ExtendedDegree::minus_infinity());
  CHECK_THROWS_AS(F.set({4}, 1), ValidationError);

  const FiniteMap f = map_of({2}, {4}, {1, 3});
  const IntSeries lift = proper_lift(f);
  CHECK(lift_delta0(lift, V{1}) == 2);
  CHECK(lift_delta0(lift, V{0}) == 1);
  CHECK(lift_delta0(lift, V{5}) == 0);

  // Product of coordinate binomials integrates to the product of the sums.
  IntSeries G(2, 4);
  G.set({2, 1}, 1);
  CHECK(integral(G, V{4, 3}) == testsupport::choose(4, 3) * testsupport::choose(3, 2));
  CHECK(integral(G, V{4, 3}) ==
        integral(V{4, 3}, [&](std::span<const std::uint64_t> x) { return G.evaluate(x); }));
}

TEST_CASE("tensor products") {
  const FiniteMap a = map_of({3}, {3}, {1, 2, 2});
  const FiniteMap b = map_of({3}, {3}, {0, 1, 2});
  const std::vector<FiniteMap> ab{a, b};
  const FiniteMap t = tensor_product(ab);
  CHECK(t.domain() == AbelianShape({3, 3}));
  for (std::uint64_t x = 0; x < 3; ++x)
    for (std::uint64_t y = 0; y < 3; ++y) CHECK(t(V{x, y})[0] == a(V{x})[0] * b(V{y})[0] % 3);
  const std::vector<FiniteMap> with_zero{a, FiniteMap::zero(AbelianShape({3}), AbelianShape({3}))};
  CHECK(tensor_product(with_zero).is_zero());

  const std::vector<IntSeries> lifts{proper_lift(a), proper_lift(b)};
  const IntSeries T = tensor_product(lifts);
  for (std::uint64_t x = 0; x < 3; ++x)
    for (std::uint64_t y = 0; y < 3; ++y) CHECK(T.evaluate(V{x, y}) == lifts[0].evaluate(V{x}) * lifts[1].evaluate(V{y}));
}

TEST_CASE("zero counts") {
  const FiniteMap parity = map_of({4}, {2}, {0, 1, 0, 1});
  const std::vector<FiniteMap> one{parity};
  const ZeroCount z = zero_count(AbelianShape({4}), one);
  CHECK(z.count == 2);
  CHECK(z.ord.at(2) == ExtendedDegree::finite(1));
  const ZeroCount empty = zero_count(AbelianShape({4, 3}), std::span<const FiniteMap>());
  CHECK(empty.count == 12);
  CHECK(empty.ord.at(3) == ExtendedDegree::finite(1));
  const std::vector<FiniteMap> constant{map_of({4}, {2}, {1, 1, 1, 1})};
  const ZeroCount none = zero_count(AbelianShape({4}), constant);
  CHECK(none.count == 0);
  CHECK(none.ord.at(2) == ExtendedDegree::infinity());
  CHECK(integral(parity) == GroupElement{0});
}
