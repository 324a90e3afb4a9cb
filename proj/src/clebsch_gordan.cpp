#include "sobranch/clebsch_gordan.hpp"

#include <cstdlib>
#include <sstream>

#include "sobranch/partition.hpp"

namespace sobranch {

So3MultiSet So3MultiSet::single(int k, Count multiplicity) {
  So3MultiSet s;
  s.add(k, multiplicity);
  return s;
}

So3MultiSet So3MultiSet::range(int lo, int hi, int step) {
  So3MultiSet s;
  for (int k = lo; k <= hi; k += step) s.add(k, 1);
  return s;
}

void So3MultiSet::add(int k, Count multiplicity) {
  if (k < 0) throw DomainError("tau_k needs k >= 0, got " + std::to_string(k));
  if (multiplicity == 0) return;
  const Count updated = checked_add(mult(k), multiplicity);
  if (updated < 0) throw InternalInconsistency("negative SO(3) multiplicity");
  if (updated == 0) {
    mult_.erase(k);
  } else {
    mult_[k] = updated;
  }
}

Count So3MultiSet::mult(int k) const {
  auto it = mult_.find(k);
  return it == mult_.end() ? 0 : it->second;
}

Count So3MultiSet::dimension() const {
  Count dim = 0;
  for (const auto& [k, m] : mult_) dim = checked_add(dim, checked_mul(m, 2 * k + 1));
  return dim;
}

So3MultiSet operator+(So3MultiSet a, const So3MultiSet& b) {
  for (const auto& [k, m] : b.mult_) a.add(k, m);
  return a;
}

std::string So3MultiSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, m] : mult_) {
    if (!first) os << ", ";
    first = false;
    os << "tau" << k << ':' << m;
  }
  os << '}';
  return os.str();
}

So3MultiSet tensor(const So3MultiSet& a, const So3MultiSet& b) {
  So3MultiSet out;
  for (const auto& [ka, ma] : a.entries()) {
    for (const auto& [kb, mb] : b.entries()) {
      const Count m = checked_mul(ma, mb);
      for (int c = std::abs(ka - kb); c <= ka + kb; ++c) out.add(c, m);
    }
  }
  return out;
}

So3MultiSet so3_tensor_decompose(std::span<const So3MultiSet> factors) {
  So3MultiSet acc = So3MultiSet::single(0);
  for (const auto& f : factors) {
    if (f == So3MultiSet::single(0)) continue;
    acc = tensor(acc, f);
  }
  return acc;
}

Count su2_tensor_multiplicity(std::span<const int> r, int k) {
  if (k < 0) throw DomainError("su2_tensor_multiplicity needs k >= 0");
  if (r.empty()) return k == 0 ? 1 : 0;
  const std::size_t n = r.size() - 1;
  Weight base(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (r[i] < 0) throw DomainError("su2_tensor_multiplicity needs non-negative labels");
    base.set_doubled(i, 2 * r[i]);
  }
  const Weight last = Weight::unit(n + 1, n);
  const Count result =
      count_sigma_prime(n, base - k * last) - count_sigma_prime(n, base + (k + 2) * last);
  if (result < 0) {
    throw InternalInconsistency("negative SU(2) tensor multiplicity");
  }
  return result;
}

std::vector<So3MultiSet> closed_form_factors(Family family, const Weight& lambda,
                                             const Weight& mu) {
  const int n = static_cast<int>(mu.rank());
  if (n < minimum_n(family)) throw DomainError("closed form: n below the family minimum");
  if (!interlace(InterlaceKind::Simple, family, lambda, mu)) {
    throw PreconditionError("closed form requires mu " + mu.to_string() +
                            " to simply interlace lambda " + lambda.to_string());
  }
  std::vector<So3MultiSet> factors;
  if (family == Family::B) {
    factors.push_back(So3MultiSet::single(lambda.integer(static_cast<std::size_t>(n))));
  } else {
    const int top = lambda.integer(static_cast<std::size_t>(n));
    const int bottom = std::abs(lambda.integer(static_cast<std::size_t>(n) + 1));
    factors.push_back(So3MultiSet::range(bottom, top));
  }
  for (int j = 0; j < n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    // |mu_j| only matters for the last K coordinate of family B
    const int gap = lambda.integer(uj) - std::abs(mu.integer(uj));
    So3MultiSet factor;
    for (int m = 0; m <= gap / 2; ++m) factor.add(gap - 2 * m, 1);
    factors.push_back(factor);
  }
  return factors;
}

So3MultiSet closed_form_B(const Weight& lambda, const Weight& mu) {
  const auto factors = closed_form_factors(Family::B, lambda, mu);
  return so3_tensor_decompose(factors);
}

So3MultiSet closed_form_D(const Weight& lambda, const Weight& mu) {
  const auto factors = closed_form_factors(Family::D, lambda, mu);
  return so3_tensor_decompose(factors);
}

}  // namespace sobranch
