#pragma once

// Implicit branching law G -> K x H through a Laurent-polynomial generating
// function in the H variable: the coefficient of x^{k+1/2} in
//   sum over admissible a-tuples of prod_i [l_i] * (x^{l_{n+1}} - x^{-l_{n+1}})
// is the multiplicity of sigma_mu (x) tau_k.

#include <map>
#include <vector>

#include "sobranch/kostant.hpp"
#include "sobranch/laurent.hpp"
#include "sobranch/weights.hpp"

namespace sobranch {

struct ATuple {
  std::vector<int> a;          // n entries (B) or n+1 entries (D)
  std::vector<int> l;          // l_1 .. l_n, all >= 1
  int l_last_doubled = 1;      // 2 l_{n+1}, odd and >= 1
};

/// All a-tuples admitted by the boxes for (lambda, mu), with their l
/// parameters. Empty when mu does not triply interlace lambda. Family D
/// reads |lambda_{n+2}| in the last box.
std::vector<ATuple> enumerate_atuples(Family family, const Weight& lambda, const Weight& mu);

/// The product of brackets and the half-integral binomial for one tuple.
LaurentPoly atuple_term(const ATuple& t);

LaurentPoly tsukamoto_generating_function(Family family, const Weight& lambda, const Weight& mu);

/// Coefficients m_k of x^{k+1/2}; MalformedSeriesError unless p is
/// antisymmetric with half-integral exponents and non-negative m_k.
std::map<int, Count> extract_multiplicities(const LaurentPoly& p);

Count multiplicity_tsukamoto(const BranchingQuery& q);

}  // namespace sobranch
