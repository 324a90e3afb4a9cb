#include "doctest.h"
#include "grid.hpp"
#include "sobranch/kostant.hpp"
#include "sobranch/oracle.hpp"
#include "sobranch/tsukamoto.hpp"

using namespace sobranch;
using sobranch::testing::for_each_query;
using sobranch::testing::sweep_lambdas;
using sobranch::testing::sweep_mus;

namespace {

Weight W(std::initializer_list<int> v) { return Weight::from_integers(v); }

// x^{l} - x^{-l}, l = d/2
LaurentPoly odd(int d) { return LaurentPoly::odd_binomial(d); }

}  // namespace

TEST_CASE("laurent arithmetic") {
  CHECK(quantum_bracket(1) == LaurentPoly::constant(1));
  CHECK(quantum_bracket(2) == LaurentPoly::monomial(2) + LaurentPoly::monomial(-2));
  CHECK(mul(odd(2), quantum_bracket(2)) == odd(4));
  CHECK(add(odd(2), -odd(2)).is_zero());
  CHECK_THROWS_AS(quantum_bracket(0), DomainError);
  const LaurentPoly p = LaurentPoly::monomial(3, 2) + LaurentPoly::monomial(-1, 5);
  CHECK(p.reflected() == LaurentPoly::monomial(-3, 2) + LaurentPoly::monomial(1, 5));
  CHECK(p.coefficient(3) == 2);
  CHECK(p.coefficient(1) == 0);
  CHECK((p * LaurentPoly::constant(0)).is_zero());
}

TEST_CASE("quantum brackets divide exactly") {
  // (x - x^{-1})^n [l_1]...[l_n] == prod (x^{l_i} - x^{-l_i})
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      for (int c = 1; c <= 6; ++c) {
        const LaurentPoly lhs = odd(2) * odd(2) * odd(2) * quantum_bracket(a) *
                                quantum_bracket(b) * quantum_bracket(c);
        REQUIRE(lhs == odd(2 * a) * odd(2 * b) * odd(2 * c));
      }
    }
  }
}

TEST_CASE("atuple terms multiply back") {
  for (auto [f, n, mx] : {std::tuple{Family::B, 2, 3}, std::tuple{Family::D, 1, 3},
                          std::tuple{Family::D, 2, 2}}) {
    for (const auto& lam : sweep_lambdas(f, n, mx)) {
      for (const auto& mu : sweep_mus(f, n, lam)) {
        for (const auto& t : enumerate_atuples(f, lam, mu)) {
          LaurentPoly lhs = atuple_term(t);
          LaurentPoly rhs = odd(t.l_last_doubled);
          for (int li : t.l) {
            lhs = lhs * odd(2);
            rhs = rhs * odd(2 * li);
          }
          REQUIRE(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("extract_multiplicities") {
  CHECK(extract_multiplicities(odd(3)) == std::map<int, Count>{{1, 1}});
  const LaurentPoly p = LaurentPoly::constant(2) * odd(1) + odd(5);
  CHECK(extract_multiplicities(p) == std::map<int, Count>{{0, 2}, {2, 1}});
  CHECK(extract_multiplicities(LaurentPoly{}).empty());
  CHECK_THROWS_AS(extract_multiplicities(LaurentPoly::monomial(1)), MalformedSeriesError);
  CHECK_THROWS_AS(extract_multiplicities(odd(2)), MalformedSeriesError);
  CHECK_THROWS_AS(extract_multiplicities(-odd(3)), MalformedSeriesError);
}

TEST_CASE("generating function examples") {
  CHECK(tsukamoto_generating_function(Family::B, W({1, 0, 0}), W({0, 0})) == odd(3));
  CHECK(tsukamoto_generating_function(Family::B, W({0, 0, 0}), W({0, 0})) == odd(1));
  CHECK(tsukamoto_generating_function(Family::D, W({1, 0, 0}), W({0})) == odd(3));
  const auto tuples = enumerate_atuples(Family::B, W({1, 0, 0}), W({0, 0}));
  REQUIRE(tuples.size() == 2);
  CHECK(tuples[0].a == std::vector<int>{0, 0});
  CHECK(tuples[0].l == std::vector<int>{2, 1});
  CHECK(tuples[1].a == std::vector<int>{1, 0});
  CHECK(tuples[1].l == std::vector<int>{1, 1});
  for (const auto& t : tuples) CHECK(t.l_last_doubled == 1);
  CHECK(tsukamoto_generating_function(Family::B, W({1, 0, 0}), W({2, 0})).is_zero());
  CHECK_THROWS_AS(tsukamoto_generating_function(Family::B, W({0, 1, 0}), W({0, 0})), DomainError);
}

TEST_CASE("multiplicity_tsukamoto examples") {
  CHECK(multiplicity_tsukamoto({Family::B, 2, W({1, 0, 0}), W({0, 0}), 1}) == 1);
  CHECK(multiplicity_tsukamoto({Family::B, 2, W({1, 0, 0}), W({0, 0}), 3}) == 0);
  CHECK(multiplicity_tsukamoto({Family::D, 1, W({1, 1, 1}), W({1}), 1}) == 1);
  CHECK(multiplicity_tsukamoto({Family::D, 1, W({1, 1, -1}), W({1}), 1}) == 1);
}

TEST_CASE("every enumerated tuple has l_i >= 1") {
  for (auto [f, n, mx] : {std::tuple{Family::B, 2, 4}, std::tuple{Family::D, 1, 4},
                          std::tuple{Family::D, 2, 3}, std::tuple{Family::B, 3, 3}}) {
    for (const auto& lam : sweep_lambdas(f, n, mx)) {
      for (const auto& mu : sweep_mus(f, n, lam)) {
        const auto tuples = enumerate_atuples(f, lam, mu);
        if (!interlace(InterlaceKind::Triple, f, lam, mu)) CHECK(tuples.empty());
        for (const auto& t : tuples) {
          CHECK(t.a.size() == static_cast<std::size_t>(f == Family::B ? n : n + 1));
          CHECK(t.l.size() == static_cast<std::size_t>(n));
          for (int li : t.l) CHECK(li >= 1);
          CHECK(t.l_last_doubled >= 1);
          CHECK(t.l_last_doubled % 2 == 1);
        }
      }
    }
  }
}

TEST_CASE("agrees with the full Kostant sum") {
  for (auto [f, n, mx] : {std::tuple{Family::B, 2, 3}, std::tuple{Family::D, 1, 3},
                          std::tuple{Family::D, 2, 2}, std::tuple{Family::B, 3, 2}}) {
    for_each_query(f, n, mx, [&](const BranchingQuery& q) {
      REQUIRE_MESSAGE(multiplicity_tsukamoto(q) == multiplicity_kostant_full(q),
                      q.lambda.to_string() << " " << q.mu.to_string() << " k=" << q.k);
    });
  }
}

TEST_CASE("H-dimension per mu matches the oracle") {
  for (auto [f, n, mx] : {std::tuple{Family::B, 2, 3}, std::tuple{Family::D, 1, 3}}) {
    for (const auto& lam : sweep_lambdas(f, n, mx)) {
      const auto table = branch_oracle(f, n, lam);
      for (const auto& mu : sweep_mus(f, n, lam)) {
        Count from_series = 0;
        for (auto [k, m] : extract_multiplicities(tsukamoto_generating_function(f, lam, mu))) {
          from_series += m * (2 * k + 1);
        }
        Count from_oracle = 0;
        for (const auto& [key, m] : table) {
          if (key.first == mu) from_oracle += m * (2 * key.second + 1);
        }
        REQUIRE_MESSAGE(from_series == from_oracle, lam.to_string() << " " << mu.to_string());
      }
    }
  }
}
