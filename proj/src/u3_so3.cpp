#include "sobranch/u3_so3.hpp"

#include <map>
#include <mutex>

namespace sobranch {

U3Weight::U3Weight(int a1, int a2, int a3) : a1_(a1), a2_(a2), a3_(a3) {
  if (!(a1 >= a2 && a2 >= a3)) {
    throw DomainError("U(3) highest weight must satisfy a1 >= a2 >= a3");
  }
}

Count U3Weight::dimension() const {
  return static_cast<Count>(a1_ - a2_ + 1) * (a2_ - a3_ + 1) * (a1_ - a3_ + 2) / 2;
}

namespace {

// ceil(x / 2) for any integer x
Count ceil_half(Count x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

}  // namespace

std::vector<U3Case> u3_to_so3_cases(int p, int q, int k) {
  if (k < 0) throw DomainError("k must be non-negative");
  if (!(0 <= q && q <= p)) throw DomainError("need 0 <= q <= p");
  std::vector<U3Case> out;
  const Count top = ceil_half(p - k + 1);
  const Count cut_low = ceil_half(p - k - q);
  const Count cut_high = ceil_half(q - k);
  const bool middle = k <= p && p <= 2 * k;
  const bool high = 2 * k <= p;

  if (p <= k - 1) out.push_back({1, 0});
  if (middle && q <= p - k) out.push_back({2, top - cut_low});
  if (middle && p - k <= q && q <= k) out.push_back({3, top});
  if (middle && k <= q) out.push_back({4, top - cut_high});
  if (high && q <= k) out.push_back({5, top - cut_low});
  if (high && k <= q && q <= p - k) out.push_back({6, top - cut_low - cut_high});
  if (high && p - k <= q) out.push_back({7, top - cut_high});
  return out;
}

Count u3_to_so3_closed(const U3Weight& lambda, int k) {
  const auto cases = u3_to_so3_cases(lambda.p(), lambda.q(), k);
  if (cases.empty()) {
    throw InternalInconsistency("no case of the U(3) -> SO(3) formula applies");
  }
  return cases.front().value;
}

std::vector<std::pair<std::array<int, 3>, Count>> u3_weights(const U3Weight& lambda) {
  std::map<std::array<int, 3>, Count> mult;
  const int a1 = lambda.a1(), a2 = lambda.a2(), a3 = lambda.a3();
  const int total = a1 + a2 + a3;
  for (int b1 = a2; b1 <= a1; ++b1) {
    for (int b2 = a3; b2 <= a2; ++b2) {
      for (int c = b2; c <= b1; ++c) {
        ++mult[{c, b1 + b2 - c, total - b1 - b2}];
      }
    }
  }
  return {mult.begin(), mult.end()};
}

So3MultiSet u3_restriction_oracle(const U3Weight& lambda) {
  // images of the U(3) weights on the SO(3) torus diag(e^{it}, e^{-it}, 1)
  std::map<int, Count> image;
  for (const auto& [eta, m] : u3_weights(lambda)) image[eta[0] - eta[1]] += m;

  So3MultiSet out;
  while (!image.empty()) {
    const auto [top, m] = *image.rbegin();
    if (m <= 0 || top < 0) {
      throw InternalInconsistency("SO(3) stripping left a non-positive top weight");
    }
    out.add(top, m);
    for (int j = -top; j <= top; ++j) {
      auto it = image.find(j);
      if (it == image.end() || it->second < m) {
        throw InternalInconsistency("SO(3) stripping produced a negative multiplicity");
      }
      it->second -= m;
      if (it->second == 0) image.erase(it);
    }
  }
  return out;
}

Count u3_to_so3_oracle(const U3Weight& lambda, int k) {
  return u3_restriction_oracle(lambda).mult(k);
}

So3MultiSet u3_restriction_closed(const U3Weight& lambda) {
  So3MultiSet out;
  // tau_k with k > p cannot occur: the top SO(3) weight is a1 - a3.
  for (int k = 0; k <= lambda.p(); ++k) out.add(k, u3_to_so3_closed(lambda, k));
  return out;
}

namespace {

const So3MultiSet& cached_restriction(const U3Weight& lambda) {
  static std::mutex mutex;
  static std::map<U3Weight, So3MultiSet> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(lambda);
  if (it == cache.end()) it = cache.emplace(lambda, u3_restriction_closed(lambda)).first;
  return it->second;
}

// 1-based coordinate access
int at(const Weight& w, int i) { return w.integer(static_cast<std::size_t>(i - 1)); }

}  // namespace

bool ending_pattern_B(const Weight& lambda, const Weight& mu) {
  const int n = static_cast<int>(mu.rank());
  if (n < 2) return false;
  require_g_weight(Family::B, n, lambda);
  require_k_weight(Family::B, n, mu);
  for (int i = 1; i <= n - 2; ++i) {
    if (at(lambda, i + 3) != at(mu, i)) return false;
  }
  return at(mu, n - 1) <= at(lambda, n + 1);
}

bool ending_pattern_D(const Weight& lambda, const Weight& mu) {
  const int n = static_cast<int>(mu.rank());
  if (n < 1) return false;
  require_g_weight(Family::D, n, lambda);
  require_k_weight(Family::D, n, mu);
  for (int i = 1; i <= n - 1; ++i) {
    if (std::abs(at(lambda, i + 3)) != at(mu, i)) return false;
  }
  return at(mu, n) <= std::abs(at(lambda, n + 2));
}

So3MultiSet ending_B(const Weight& lambda, const Weight& mu) {
  if (!ending_pattern_B(lambda, mu)) {
    throw PreconditionError("ending_B: lambda " + lambda.to_string() + " and mu " +
                            mu.to_string() + " do not satisfy the coincidence pattern");
  }
  const int n = static_cast<int>(mu.rank());
  const U3Weight top(at(lambda, 1), at(lambda, 2), at(lambda, 3));
  const So3MultiSet tail = So3MultiSet::range(std::abs(at(mu, n)), at(mu, n - 1));
  return tensor(cached_restriction(top), tail);
}

So3MultiSet ending_D(const Weight& lambda, const Weight& mu) {
  if (!ending_pattern_D(lambda, mu)) {
    throw PreconditionError("ending_D: lambda " + lambda.to_string() + " and mu " +
                            mu.to_string() + " do not satisfy the coincidence pattern");
  }
  const int n = static_cast<int>(mu.rank());
  const U3Weight top(at(lambda, 1), at(lambda, 2), std::abs(at(lambda, 3)));
  return tensor(cached_restriction(top), So3MultiSet::single(at(mu, n)));
}

}  // namespace sobranch
