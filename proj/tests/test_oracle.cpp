#include "doctest.h"
#include "grid.hpp"
#include "sobranch/oracle.hpp"

using namespace sobranch;
using sobranch::testing::sweep_lambdas;

namespace {

Weight W(std::initializer_list<int> v) { return Weight::from_integers(v); }

}  // namespace

TEST_CASE("weight_multiplicities examples") {
  const auto std7 = weight_multiplicities(Family::B, W({1, 0, 0}));
  CHECK(std7.size() == 7);
  CHECK(std7.total() == 7);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std7.at(Weight::unit(3, i)) == 1);
    CHECK(std7.at(-Weight::unit(3, i)) == 1);
  }
  CHECK(std7.at(W({0, 0, 0})) == 1);

  const auto std4 = weight_multiplicities(Family::D, W({1, 0}));
  CHECK(std4.size() == 4);
  CHECK(std4.at(W({0, -1})) == 1);
  CHECK(std4.at(W({0, 0})) == 0);

  const auto adj = weight_multiplicities(Family::B, W({1, 1}));
  CHECK(adj.total() == 10);
  CHECK(adj.at(W({0, 0})) == 2);
  CHECK(adj.at(W({1, -1})) == 1);
  CHECK(adj.at(W({0, 1})) == 1);

  // spin representation of B_2
  const auto spin = weight_multiplicities(Family::B, Weight::from_doubled({1, 1}));
  CHECK(spin.total() == 4);
  CHECK_THROWS_AS(weight_multiplicities(Family::B, W({0, 1})), DomainError);
  CHECK_THROWS_AS(weight_multiplicities(Family::B, Weight::from_doubled({2, 1})), DomainError);
}

TEST_CASE("characters are Weyl invariant and match weyl_dim") {
  for (Family f : {Family::B, Family::D}) {
    for (std::size_t r = 1; r <= 4; ++r) {
      for (const auto& lam : dominant_weights(f, r, r <= 2 ? 4 : 2)) {
        const auto ch = weight_multiplicities(f, lam);
        REQUIRE(ch.total() == weyl_dim(f, lam));
        for (const auto& g : weyl_group(f, r)) {
          for (const auto& [eta, m] : ch.entries()) REQUIRE(ch.at(g.apply(eta)) == m);
        }
      }
    }
  }
}

TEST_CASE("weyl_dim examples") {
  CHECK(weyl_dim(Family::B, W({1, 0, 0})) == 7);
  CHECK(weyl_dim(Family::B, W({0, 0, 0})) == 1);
  CHECK(weyl_dim(Family::D, W({1, 0, 0})) == 6);
  CHECK(weyl_dim(Family::B, W({1, 1, 0})) == 21);
  CHECK(weyl_dim(Family::D, W({1, 1, 1})) == 10);
  CHECK(weyl_dim(Family::D, W({1, 1, -1})) == 10);
  CHECK_THROWS_AS(weyl_dim(Family::B, W({0, 1})), DomainError);
}

TEST_CASE("xi examples") {
  const Weight rho3 = rho(Family::B, 3);
  CHECK(xi(Family::B, rho3).size() == 48);
  CHECK(xi(Family::B, W({2, 1, 0})).empty());
  CHECK(xi(Family::B, W({2, 2, 1})).empty());
  CHECK(xi(Family::D, W({2, 1, 0})).size() == 24);
  const auto x1 = xi(Family::B, Weight::from_doubled({1}));
  CHECK(x1.size() == 2);
  CHECK(x1.at(Weight::from_doubled({1})) == 1);
  CHECK(x1.at(Weight::from_doubled({-1})) == -1);
}

TEST_CASE("denominator product equals xi(rho)") {
  for (Family f : {Family::B, Family::D}) {
    for (std::size_t r = 1; r <= 4; ++r) {
      CHECK(weyl_denominator_product(f, r) == xi(f, rho(f, r)));
    }
  }
}

TEST_CASE("Weyl character identity") {
  for (Family f : {Family::B, Family::D}) {
    for (std::size_t r = 2; r <= 4; ++r) {
      const Weight rw = rho(f, r);
      const CharacterMap denom = xi(f, rw);
      for (const auto& lam : dominant_weights(f, r, r <= 3 ? 3 : 2)) {
        REQUIRE_MESSAGE(weight_multiplicities(f, lam) * denom == xi(f, lam + rw), lam.to_string());
      }
    }
  }
}

TEST_CASE("branch_oracle examples") {
  const MultiplicityTable b7 = branch_oracle(Family::B, 2, W({1, 0, 0}));
  CHECK(b7 == MultiplicityTable{{{W({1, 0}), 0}, 1}, {{W({0, 0}), 1}, 1}});
  CHECK(branch_oracle(Family::B, 2, W({0, 0, 0})) == MultiplicityTable{{{W({0, 0}), 0}, 1}});
  CHECK(branch_oracle(Family::D, 1, W({1, 0, 0})) ==
        MultiplicityTable{{{W({1}), 0}, 1}, {{W({0}), 1}, 1}});
  CHECK_THROWS_AS(branch_oracle(Family::B, 1, W({1, 0})), DomainError);
  CHECK_THROWS_AS(branch_oracle(Family::D, 1, W({0, 0, 1, 0})), DomainError);
}

TEST_CASE("branch_oracle conserves dimension") {
  for (auto [f, n, mx] : {std::tuple{Family::B, 2, 3}, std::tuple{Family::D, 1, 3},
                          std::tuple{Family::D, 2, 2}, std::tuple{Family::B, 3, 2}}) {
    for (const auto& lam : sweep_lambdas(f, n, mx)) {
      const auto table = branch_oracle(f, n, lam);
      REQUIRE_MESSAGE(table_dimension(f, table) == weyl_dim(f, lam), lam.to_string());
      for (const auto& [key, m] : table) {
        CHECK(m > 0);
        CHECK(is_dominant(k_series(f), key.first));
        CHECK(key.second >= 0);
      }
    }
  }
}

TEST_CASE("CharacterMap arithmetic") {
  CharacterMap a;
  a.add(W({1}), 2);
  a.add(W({1}), -2);
  CHECK(a.empty());
  a.add(W({1}), 1);
  a.add(W({-1}), 1);
  const CharacterMap sq = a * a;
  CHECK(sq.at(W({0})) == 2);
  CHECK(sq.at(W({2})) == 1);
  CHECK(sq.total() == 4);
  const auto s = sq.sorted();
  REQUIRE(s.size() == 3);
  CHECK(s.front().first == W({-2}));
}
