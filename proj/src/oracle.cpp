#include "sobranch/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace sobranch {

__extension__ typedef __int128 Wide;

// ----------------------------------------------------------- CharacterMap

void CharacterMap::add(const Weight& eta, Count m) {
  if (m == 0) return;
  auto [it, inserted] = mult_.try_emplace(eta, m);
  if (inserted) return;
  it->second = checked_add(it->second, m);
  if (it->second == 0) mult_.erase(it);
}

Count CharacterMap::at(const Weight& eta) const {
  auto it = mult_.find(eta);
  return it == mult_.end() ? 0 : it->second;
}

Count CharacterMap::total() const {
  Count t = 0;
  for (const auto& [eta, m] : mult_) t = checked_add(t, m);
  return t;
}

std::vector<std::pair<Weight, Count>> CharacterMap::sorted() const {
  std::vector<std::pair<Weight, Count>> out(mult_.begin(), mult_.end());
  std::sort(out.begin(), out.end());
  return out;
}

CharacterMap CharacterMap::restricted(Family family) const {
  CharacterMap out;
  for (const auto& [eta, m] : mult_) out.add(restrict(family, eta), m);
  return out;
}

CharacterMap operator*(const CharacterMap& a, const CharacterMap& b) {
  CharacterMap out;
  for (const auto& [x, mx] : a.mult_) {
    for (const auto& [y, my] : b.mult_) out.add(x + y, checked_mul(mx, my));
  }
  return out;
}

// ------------------------------------------------------------- Freudenthal

namespace {

// Coefficients of lambda - mu in the simple roots, summed; -1 if lambda - mu
// is not a non-negative integer combination of simple roots.
Count root_height(Family series, const Weight& diff) {
  const std::size_t r = diff.rank();
  if (!diff.is_integral()) return -1;
  std::vector<Count> d(r);
  for (std::size_t i = 0; i < r; ++i) d[i] = diff.doubled(i) / 2;
  Count height = 0;
  Count partial = 0;
  if (series == Family::B) {
    // simple roots e1-e2, ..., e_{r-1}-e_r, e_r
    for (std::size_t j = 0; j < r; ++j) {
      partial += d[j];
      if (partial < 0) return -1;
      height += partial;
    }
    return height;
  }
  if (r == 1) return d[0] == 0 ? 0 : -1;
  // simple roots e1-e2, ..., e_{r-1}-e_r, e_{r-1}+e_r
  for (std::size_t j = 0; j + 2 < r; ++j) {
    partial += d[j];
    if (partial < 0) return -1;
    height += partial;
  }
  partial += d[r - 2];
  const Count a = partial - d[r - 1];
  const Count b = partial + d[r - 1];
  if (a < 0 || b < 0 || a % 2 != 0) return -1;
  return height + a / 2 + b / 2;
}

// Dominant weights mu of the same rank and parity class as lambda with
// mu_1 <= lambda_1; the caller filters by root_height.
std::vector<Weight> dominant_candidates(Family series, const Weight& lambda) {
  const std::size_t r = lambda.rank();
  std::vector<Weight> out;
  if (r == 0) return out;
  // D_1 is a torus
  if (series == Family::D && r == 1) return {lambda};
  const int top = lambda.doubled(0);
  const int parity = ((lambda.doubled(0) % 2) + 2) % 2;
  std::vector<int> c(r);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int bound) {
    if (i == r) {
      out.push_back(Weight::from_doubled(std::span<const int>(c)));
      return;
    }
    const bool signed_slot = series == Family::D && i + 1 == r;
    const int low = signed_slot ? -bound : parity;
    for (int v = bound; v >= low; v -= 2) {
      c[i] = v;
      rec(i + 1, signed_slot ? bound : v);
    }
  };
  // largest admissible first coordinate with the right parity
  int start = top;
  if (((start % 2) + 2) % 2 != parity) --start;
  rec(0, start);
  return out;
}

std::vector<Weight> orbit(Family series, const Weight& w) {
  std::set<Weight> seen;
  for (const auto& g : weyl_group(series, w.rank())) seen.insert(g.apply(w));
  return {seen.begin(), seen.end()};
}

}  // namespace

std::map<Weight, Count> dominant_weight_multiplicities(Family series, const Weight& lambda) {
  if (lambda.rank() == 0) throw DomainError("weight_multiplicities needs rank >= 1");
  if (!is_dominant(series, lambda)) {
    throw DomainError("highest weight " + lambda.to_string() + " is not dominant");
  }
  // parity of every coordinate must agree for a weight of the group/spin cover
  for (std::size_t i = 1; i < lambda.rank(); ++i) {
    if ((lambda.doubled(i) - lambda.doubled(0)) % 2 != 0) {
      throw DomainError("highest weight mixes integral and half-integral coordinates");
    }
  }
  const std::size_t r = lambda.rank();

  std::vector<std::pair<Count, Weight>> by_height;
  for (const auto& mu : dominant_candidates(series, lambda)) {
    const Count h = root_height(series, lambda - mu);
    if (h >= 0) by_height.emplace_back(h, mu);
  }
  std::sort(by_height.begin(), by_height.end());

  const Weight rho_w = rho(series, r);
  const auto roots = positive_roots(series, r);
  const Weight top = lambda + rho_w;
  const std::int64_t top_norm = doubled_dot(top, top);

  std::map<Weight, Count> mult;
  for (const auto& [h, mu] : by_height) {
    if (h == 0) {
      mult[mu] = 1;
      continue;
    }
    Count numerator = 0;
    for (const auto& alpha : roots) {
      Weight nu = mu + alpha;
      while (true) {
        auto it = mult.find(dominant_representative(series, nu));
        if (it == mult.end()) break;
        numerator = checked_add(numerator, checked_mul(it->second, doubled_dot(nu, alpha)));
        nu += alpha;
      }
    }
    numerator = checked_mul(numerator, 2);
    const Weight shifted = mu + rho_w;
    const std::int64_t denominator = top_norm - doubled_dot(shifted, shifted);
    if (denominator <= 0 || numerator % denominator != 0) {
      throw InternalInconsistency("Freudenthal recursion did not divide exactly at " +
                                  mu.to_string());
    }
    const Count m = numerator / denominator;
    if (m <= 0) {
      throw InternalInconsistency("Freudenthal produced a non-positive multiplicity at " +
                                  mu.to_string());
    }
    mult[mu] = m;
  }
  return mult;
}

CharacterMap weight_multiplicities(Family series, const Weight& lambda) {
  CharacterMap ch;
  for (const auto& [mu, m] : dominant_weight_multiplicities(series, lambda)) {
    for (const auto& eta : orbit(series, mu)) ch.add(eta, m);
  }
  return ch;
}

Count weyl_dim(Family series, const Weight& lambda) {
  if (!is_dominant(series, lambda)) {
    throw DomainError("weyl_dim: " + lambda.to_string() + " is not dominant");
  }
  const std::size_t r = lambda.rank();
  const Weight rho_w = rho(series, r);
  const Weight shifted = lambda + rho_w;
  Wide num = 1;
  Wide den = 1;
  for (const auto& alpha : positive_roots(series, r)) {
    num *= doubled_dot(shifted, alpha);
    den *= doubled_dot(rho_w, alpha);
    // reduce by gcd to keep the fraction small
    Wide a = num < 0 ? -num : num, b = den;
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  }
  if (den != 1) throw InternalInconsistency("Weyl dimension is not an integer");
  return static_cast<Count>(num);
}

CharacterMap xi(Family series, const Weight& eta) {
  CharacterMap out;
  for (const auto& g : weyl_group(series, eta.rank())) out.add(g.apply(eta), g.sign());
  return out;
}

CharacterMap weyl_denominator_product(Family series, std::size_t rank) {
  CharacterMap acc;
  acc.add(Weight(rank), 1);
  for (const auto& alpha : positive_roots(series, rank)) {
    Weight half(rank);
    for (std::size_t i = 0; i < rank; ++i) half.set_doubled(i, alpha.doubled(i) / 2);
    CharacterMap factor;
    factor.add(half, 1);
    factor.add(-half, -1);
    acc = acc * factor;
  }
  return acc;
}

// ----------------------------------------------------------------- branching

MultiplicityTable branch_oracle(Family family, int n, const Weight& lambda) {
  if (n < minimum_n(family)) throw DomainError("branch_oracle: n below the family minimum");
  require_g_weight(family, n, lambda);
  const Family k_type = k_series(family);
  const auto un = static_cast<std::size_t>(n);

  CharacterMap residual = weight_multiplicities(family, lambda).restricted(family);
  std::map<Weight, CharacterMap> k_chars;
  MultiplicityTable table;

  while (!residual.empty()) {
    const Weight* top = nullptr;
    for (const auto& [eta, m] : residual.entries()) {
      if (top == nullptr || *top < eta) top = &eta;
    }
    const Weight highest = *top;
    const Count c = residual.at(highest);
    const Weight mu = highest.head(un);
    const int k2 = highest.doubled(un);
    if (c <= 0 || !is_dominant(k_type, mu) || k2 < 0 || k2 % 2 != 0 || !mu.is_integral()) {
      throw InternalInconsistency("stripping reached a non-dominant or non-positive top " +
                                  highest.to_string());
    }
    const int k = k2 / 2;
    table[{mu, k}] += c;

    auto it = k_chars.find(mu);
    if (it == k_chars.end()) it = k_chars.emplace(mu, weight_multiplicities(k_type, mu)).first;
    for (const auto& [nu, m] : it->second.entries()) {
      for (int j = -k; j <= k; ++j) {
        const Weight eta = nu.appended(2 * j);
        residual.add(eta, -checked_mul(c, m));
        if (residual.at(eta) < 0) {
          throw InternalInconsistency("stripping produced a negative residual at " +
                                      eta.to_string());
        }
      }
    }
  }
  return table;
}

Count table_dimension(Family family, const MultiplicityTable& table) {
  Count total = 0;
  for (const auto& [key, m] : table) {
    const auto& [mu, k] = key;
    total = checked_add(total, checked_mul(checked_mul(m, weyl_dim(k_series(family), mu)), 2 * k + 1));
  }
  return total;
}

}  // namespace sobranch
