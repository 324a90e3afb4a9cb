#include "sobranch/laurent.hpp"

#include <sstream>

namespace sobranch {

LaurentPoly LaurentPoly::constant(Count c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int doubled_exponent, Count c) {
  LaurentPoly p;
  p.add_term(doubled_exponent, c);
  return p;
}

LaurentPoly LaurentPoly::odd_binomial(int doubled_l) {
  LaurentPoly p;
  p.add_term(doubled_l, 1);
  p.add_term(-doubled_l, -1);
  return p;
}

LaurentPoly LaurentPoly::quantum_bracket(int l) {
  if (l < 1) throw DomainError("quantum_bracket needs an integer l >= 1, got " + std::to_string(l));
  LaurentPoly p;
  for (int e = l - 1; e >= 1 - l; e -= 2) p.add_term(2 * e, 1);
  return p;
}

Count LaurentPoly::coefficient(int doubled_exponent) const {
  auto it = coeffs_.find(doubled_exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int doubled_exponent, Count c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(doubled_exponent, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) coeffs_.erase(it);
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_.emplace(-e, c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_.emplace(e, -c);
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) p.add_term(ea + eb, checked_mul(ca, cb));
  }
  return p;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Count mag = c < 0 ? -c : c;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << "x^";
    if (e % 2 == 0) os << e / 2;
    else os << '(' << e << "/2)";
  }
  return os.str();
}

}  // namespace sobranch
