#pragma once

#include <map>
#include <string>

#include "sobranch/errors.hpp"

namespace sobranch {

/// Integer Laurent polynomial in x = e^{epsilon} with half-integral
/// exponents allowed. Exponents are stored doubled; zero coefficients are
/// never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(Count c);
  /// c x^{doubled_exponent / 2}
  static LaurentPoly monomial(int doubled_exponent, Count c = 1);
  /// x^{l} - x^{-l} for l = doubled_l / 2.
  static LaurentPoly odd_binomial(int doubled_l);
  /// (x^l - x^{-l}) / (x - x^{-1}) = x^{l-1} + x^{l-3} + ... + x^{1-l}, l >= 1.
  static LaurentPoly quantum_bracket(int l);

  Count coefficient(int doubled_exponent) const;
  const std::map<int, Count>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  /// Same polynomial with x replaced by x^{-1}.
  LaurentPoly reflected() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void add_term(int doubled_exponent, Count c);

  std::map<int, Count> coeffs_;
};

inline LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
inline LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
inline LaurentPoly quantum_bracket(int l) { return LaurentPoly::quantum_bracket(l); }

}  // namespace sobranch
