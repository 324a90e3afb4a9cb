#pragma once

// U(3) -> SO(3) branching and the decompositions of Hom_K(sigma_mu, pi_lambda)
// when the tail of lambda coincides with mu.

#include <array>
#include <utility>
#include <vector>

#include "sobranch/clebsch_gordan.hpp"
#include "sobranch/errors.hpp"
#include "sobranch/weights.hpp"

namespace sobranch {

/// Highest weight a1 >= a2 >= a3 of an irreducible U(3) representation.
class U3Weight {
 public:
  U3Weight(int a1, int a2, int a3);

  int a1() const { return a1_; }
  int a2() const { return a2_; }
  int a3() const { return a3_; }
  int p() const { return a1_ - a3_; }
  int q() const { return a2_ - a3_; }

  /// (a1 - a2 + 1)(a2 - a3 + 1)(a1 - a3 + 2) / 2
  Count dimension() const;

  friend auto operator<=>(const U3Weight&, const U3Weight&) = default;

 private:
  int a1_, a2_, a3_;
};

/// One case of the piecewise U(3) -> SO(3) formula that applies at (p, q, k):
/// its 1-based position in the case list and its value.
struct U3Case {
  int index;
  Count value;
};

/// Every case whose guard holds at (p, q, k). Overlapping guards are
/// returned together so their agreement can be checked.
std::vector<U3Case> u3_to_so3_cases(int p, int q, int k);

/// Multiplicity of tau_k in the restriction, from the piecewise formula in
/// p = a1 - a3, q = a2 - a3. Uses the first applicable case.
Count u3_to_so3_closed(const U3Weight& lambda, int k);

/// Independent count: Gelfand-Tsetlin patterns give the U(3) weights, each
/// weight eta maps to eta_1 - eta_2 on the SO(3) torus, and SO(3)
/// characters are stripped from the top.
Count u3_to_so3_oracle(const U3Weight& lambda, int k);

/// Full restriction multisets from either route.
So3MultiSet u3_restriction_closed(const U3Weight& lambda);
So3MultiSet u3_restriction_oracle(const U3Weight& lambda);

/// The U(3) weight multiset {eta} of pi'_lambda with multiplicities, via GT
/// patterns.
std::vector<std::pair<std::array<int, 3>, Count>> u3_weights(const U3Weight& lambda);

/// Coincidence hypotheses of the ending theorems.
bool ending_pattern_B(const Weight& lambda, const Weight& mu);
bool ending_pattern_D(const Weight& lambda, const Weight& mu);

/// pi'_{lambda'}|_H (x) (sum_{j=|mu_n|}^{mu_{n-1}} tau_j), lambda' =
/// (lambda_1, lambda_2, lambda_3). PreconditionError if the pattern fails.
So3MultiSet ending_B(const Weight& lambda, const Weight& mu);

/// pi'_{lambda'}|_H (x) tau_{mu_n}, lambda' = (lambda_1, lambda_2, |lambda_3|).
So3MultiSet ending_D(const Weight& lambda, const Weight& mu);

}  // namespace sobranch
