#pragma once

// Brute-force branching that does not rely on any of the closed formulas:
// Freudenthal weight multiplicities for B_r / D_r, Weyl alternating sums,
// restriction of characters to K x H and highest-weight stripping.

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sobranch/errors.hpp"
#include "sobranch/weights.hpp"

namespace sobranch {

/// Formal integer combination sum_eta m(eta) e^eta. Zero entries are dropped.
class CharacterMap {
 public:
  CharacterMap() = default;

  void add(const Weight& eta, Count m);
  Count at(const Weight& eta) const;
  std::size_t size() const { return mult_.size(); }
  bool empty() const { return mult_.empty(); }
  /// Sum of all coefficients (the dimension, for a character).
  Count total() const;

  /// Entries sorted lexicographically by weight.
  std::vector<std::pair<Weight, Count>> sorted() const;
  const std::unordered_map<Weight, Count, WeightHash>& entries() const { return mult_; }

  CharacterMap restricted(Family family) const;

  friend CharacterMap operator*(const CharacterMap& a, const CharacterMap& b);
  friend bool operator==(const CharacterMap& a, const CharacterMap& b) {
    return a.mult_ == b.mult_;
  }

 private:
  std::unordered_map<Weight, Count, WeightHash> mult_;
};

/// Character of the irreducible B_r / D_r module with highest weight lambda
/// (r = lambda.rank()), via Freudenthal's recursion on dominant weights and
/// Weyl-orbit expansion.
CharacterMap weight_multiplicities(Family series, const Weight& lambda);

/// Multiplicities of the dominant weights only.
std::map<Weight, Count> dominant_weight_multiplicities(Family series, const Weight& lambda);

/// prod_{alpha > 0} <lambda + rho, alpha> / <rho, alpha>
Count weyl_dim(Family series, const Weight& lambda);

/// xi(eta) = sum_w sgn(w) e^{w(eta)}.
CharacterMap xi(Family series, const Weight& eta);

/// prod_{alpha > 0} (e^{alpha/2} - e^{-alpha/2}).
CharacterMap weyl_denominator_product(Family series, std::size_t rank);

/// (mu, k) -> multiplicity of sigma_mu (x) tau_k, only positive entries.
using MultiplicityTable = std::map<std::pair<Weight, int>, Count>;

/// Decomposition of pi_lambda restricted to K x H by stripping the
/// lexicographically largest remaining weight.
MultiplicityTable branch_oracle(Family family, int n, const Weight& lambda);

/// sum over the table of mult * dim(sigma_mu) * (2k+1).
Count table_dimension(Family family, const MultiplicityTable& table);

}  // namespace sobranch
