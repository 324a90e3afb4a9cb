#pragma once

// SU(2) / SO(3) tensor-product multiplicities and the closed-form
// decompositions of the multiplicity space for simply interlacing pairs.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sobranch/errors.hpp"
#include "sobranch/weights.hpp"

namespace sobranch {

/// Finite formal sum of SO(3) irreducibles tau_k (dimension 2k+1).
class So3MultiSet {
 public:
  So3MultiSet() = default;

  static So3MultiSet single(int k, Count multiplicity = 1);
  /// tau_lo + tau_{lo+step} + ... up to hi (empty if lo > hi).
  static So3MultiSet range(int lo, int hi, int step = 1);

  void add(int k, Count multiplicity);
  Count mult(int k) const;
  bool empty() const { return mult_.empty(); }
  const std::map<int, Count>& entries() const { return mult_; }

  /// sum_k mult(k) (2k+1)
  Count dimension() const;

  friend So3MultiSet operator+(So3MultiSet a, const So3MultiSet& b);
  friend bool operator==(const So3MultiSet&, const So3MultiSet&) = default;

  std::string to_string() const;

 private:
  std::map<int, Count> mult_;  // only positive values stored
};

/// Pairwise Clebsch-Gordan: tau_a (x) tau_b = sum_{c=|a-b|}^{a+b} tau_c,
/// extended bilinearly.
So3MultiSet tensor(const So3MultiSet& a, const So3MultiSet& b);

/// Iterated pairwise tensor product; an empty list gives {tau_0: 1}.
So3MultiSet so3_tensor_decompose(std::span<const So3MultiSet> factors);

/// Number of times the SU(2) irreducible of highest weight k/2 occurs in
/// tau_{r_1/2} (x) ... (x) tau_{r_m/2}, as the difference of two Sigma'
/// partition counts.
Count su2_tensor_multiplicity(std::span<const int> r, int k);

/// The tensor product
///   tau_{lambda_{n+1}} (x) (x)_j ( sum_{m} tau_{lambda_j - |mu_j| - 2m} )
/// for family B under simple interlacing; PreconditionError otherwise.
So3MultiSet closed_form_B(const Weight& lambda, const Weight& mu);

/// ( sum_{k=|lambda_{n+2}|}^{lambda_{n+1}} tau_k ) (x) (x)_m ( sum_j
/// tau_{lambda_m - mu_m - 2j} ) for family D under simple interlacing.
So3MultiSet closed_form_D(const Weight& lambda, const Weight& mu);

/// The factors of closed_form_B / closed_form_D before multiplying out.
std::vector<So3MultiSet> closed_form_factors(Family family, const Weight& lambda,
                                             const Weight& mu);

}  // namespace sobranch
