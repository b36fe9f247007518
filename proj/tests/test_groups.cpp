#include <doctest.h>

#include <numeric>

#include "axkatz/groups.hpp"
#include "support.hpp"

using namespace axkatz;

TEST_CASE("numeric helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(Prime(4), ValidationError);
  CHECK(factorize(360) == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1).empty());
  CHECK(ord(BigInt(48), 2) == 4);
  CHECK(ord(std::uint64_t{81}, 3) == 4);
  CHECK(floor_log(3, BigInt(80)) == 3);
  CHECK(floor_log(3, BigInt(81)) == 4);
  CHECK(floor_div(BigInt(-7), BigInt(2)) == -4);
  CHECK(ceil_div(BigInt(7), BigInt(2)) == 4);
  CHECK(ceil_div(BigInt(-7), BigInt(2)) == -3);
  CHECK(repunit(3, 4) == 40);
  CHECK(binomial(BigInt(10), 3) == 120);
  CHECK(binomial(BigInt(-2), 3) == -4);
  CHECK(binomial(BigInt(2), 5) == 0);
  CHECK_THROWS_AS(checked_pow(2, 64), ResourceError);
  CHECK(checked_pow(3, 4) == 81);
}

TEST_CASE("abelian shape arithmetic and indexing") {
  const AbelianShape A({4, 3, 2});
  CHECK(A.order() == 24);
  CHECK(A.exponent() == 12);
  CHECK_FALSE(A.is_p_group(2));
  CHECK(AbelianShape({4, 2, 8}).is_p_group(2));
  CHECK(A.add(std::vector<std::uint64_t>{3, 2, 1}, std::vector<std::uint64_t>{2, 2, 1}) ==
        GroupElement{1, 1, 0});
  CHECK(A.subtract(std::vector<std::uint64_t>{0, 0, 0}, std::vector<std::uint64_t>{1, 1, 1}) ==
        GroupElement{3, 2, 1});
  const auto all = enumerate_elements(A);
  REQUIRE(all.size() == 24);
  for (std::uint64_t i = 0; i < all.size(); ++i) {
    CHECK(A.index_of(all[i]) == i);
    CHECK(A.element_at(i) == all[i]);
    CHECK(all[i] == testsupport::digits(A.factors(), i));
  }
  CHECK_FALSE(A.contains(std::vector<std::uint64_t>{4, 0, 0}));
  CHECK_THROWS_AS(AbelianShape({4, 1}), ValidationError);
  CHECK(AbelianShape().order() == 1);
  CHECK(enumerate_elements(AbelianShape()).size() == 1);
  CHECK_THROWS_AS(enumerate_elements(A, 10), ResourceError);
}

TEST_CASE("p-group shapes") {
  const PGroupShape G(Prime(3), make_partition({1, 2}));
  CHECK(G.moduli() == std::vector<std::uint64_t>{9, 3});
  CHECK(G.order() == 27);
  CHECK(to_pgroup(AbelianShape({2, 8, 4})) == PGroupShape(Prime(2), make_partition({3, 2, 1})));
  CHECK_THROWS(to_pgroup(AbelianShape({2, 3})));
}

TEST_CASE("primary decomposition idempotents project onto l-parts") {
  const AbelianShape A({12, 2, 9, 5});
  const auto parts = primary_decomposition(A);
  REQUIRE(parts.size() == 3);
  CHECK(parts.at(2).shape.moduli() == std::vector<std::uint64_t>{4, 2});
  CHECK(parts.at(3).shape.moduli() == std::vector<std::uint64_t>{9, 3});
  CHECK(parts.at(5).shape.moduli() == std::vector<std::uint64_t>{5});
  for (const auto& [l, comp] : parts)
    for (std::size_t c = 0; c < comp.source_factor.size(); ++c) {
      const std::uint64_t m = A.factors()[comp.source_factor[c]];
      const std::uint64_t q = comp.shape.moduli()[c];
      const std::uint64_t e = comp.idempotent[c];
      CHECK(e % q == 1 % q);
      CHECK(e % (m / q) == 0);
      CHECK(e * e % m == e);
    }
  CHECK_THROWS_AS(primary_decomposition(AbelianShape()), ValidationError);
  CHECK(primary_components(AbelianShape()).empty());
}

TEST_CASE("delta_max anchors") {
  CHECK(delta_max(PGroupShape(Prime(2), make_partition({1, 1})), 1) == 2);
  CHECK(delta_max(PGroupShape(Prime(3), make_partition({1, 1})), 1) == 4);
  CHECK(delta_max(PGroupShape(Prime(2), make_partition({2, 1})), 2) == 3 + 1 + 2);
  CHECK(delta_max(PGroupShape(Prime(3), make_partition({1})), 2) == 2 + 2);
}
