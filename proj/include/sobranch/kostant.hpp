#pragma once

// Branching multiplicities dim Hom_{K x H}(sigma_mu (x) tau_k, pi_lambda)
// from Kostant's branching formula, both as the full alternating sum over
// the Weyl group of G and in the reduced two-term (B) / four-term (D) form.

#include <vector>

#include "sobranch/errors.hpp"
#include "sobranch/partition.hpp"
#include "sobranch/weights.hpp"

namespace sobranch {

struct BranchingQuery {
  Family family = Family::B;
  int n = 0;
  Weight lambda;  // G-dominant, rank n+1 (B) or n+2 (D)
  Weight mu;      // K-dominant, rank n
  int k = 0;      // tau_k of H = SO(3)
};

/// Throws DomainError when the query violates its invariants.
void validate(const BranchingQuery& q);

/// Query with mu_n >= 0 (B) or lambda_{n+2} >= 0 (D); the multiplicity is
/// unchanged by this normalization.
BranchingQuery tilde_normalized(const BranchingQuery& q);

/// Shared memoized counter for the Sigma of (family, n).
const PartitionCounter& sigma_counter(Family family, int n);

Count multiplicity_kostant_full(const BranchingQuery& q);

/// Requires simple interlacing (PreconditionError otherwise).
Count multiplicity_kostant_reduced(const BranchingQuery& q);

struct KostantTerm {
  SignedPermutation omega;
  int sign = 1;
  Count partitions = 0;  // P_Sigma of the shifted argument, > 0
};

/// The non-vanishing terms of the full Weyl sum, in weyl_group() order.
std::vector<KostantTerm> kostant_nonzero_terms(const BranchingQuery& q);

}  // namespace sobranch
