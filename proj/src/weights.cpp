#include "sobranch/weights.hpp"

#include <algorithm>
#include <functional>
#include <bit>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sobranch {

Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("sobranch: integer overflow in addition");
  }
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("sobranch: integer overflow in multiplication");
  }
  return out;
}

char family_name(Family family) { return family == Family::B ? 'B' : 'D'; }

Family parse_family(std::string_view text) {
  if (text == "B" || text == "b") return Family::B;
  if (text == "D" || text == "d") return Family::D;
  throw DomainError("unknown family '" + std::string(text) + "' (expected B or D)");
}

// ---------------------------------------------------------------- Weight

namespace {

void check_rank(std::size_t rank) {
  if (rank > Weight::kMaxRank) {
    throw DomainError("weight rank " + std::to_string(rank) + " exceeds the maximum " +
                      std::to_string(Weight::kMaxRank));
  }
}

void check_same_rank(const Weight& a, const Weight& b, const char* what) {
  if (a.rank() != b.rank()) {
    throw DomainError(std::string(what) + ": rank mismatch (" + std::to_string(a.rank()) +
                      " vs " + std::to_string(b.rank()) + ")");
  }
}

}  // namespace

Weight::Weight(std::size_t rank) {
  check_rank(rank);
  rank_ = static_cast<std::uint8_t>(rank);
}

Weight Weight::from_integers(std::span<const int> coords) {
  Weight w(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) w.coords_[i] = 2 * coords[i];
  return w;
}

Weight Weight::from_doubled(std::span<const int> doubled) {
  Weight w(doubled.size());
  std::copy(doubled.begin(), doubled.end(), w.coords_.begin());
  return w;
}

Weight Weight::unit(std::size_t rank, std::size_t index) {
  Weight w(rank);
  if (index >= rank) throw DomainError("unit weight index out of range");
  w.coords_[index] = 2;
  return w;
}

bool Weight::is_integral() const {
  for (std::size_t i = 0; i < rank_; ++i) {
    if (coords_[i] % 2 != 0) return false;
  }
  return true;
}

int Weight::integer(std::size_t i) const {
  if (coords_[i] % 2 != 0) {
    throw DomainError("coordinate " + std::to_string(i + 1) + " of " + to_string() +
                      " is not integral");
  }
  return coords_[i] / 2;
}

std::vector<int> Weight::integers() const {
  std::vector<int> out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) out[i] = integer(i);
  return out;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (std::size_t i = 0; i < rank_; ++i) w.coords_[i] = -w.coords_[i];
  return w;
}

Weight& Weight::operator+=(const Weight& other) {
  check_same_rank(*this, other, "weight addition");
  for (std::size_t i = 0; i < rank_; ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  check_same_rank(*this, other, "weight subtraction");
  for (std::size_t i = 0; i < rank_; ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight operator*(int scalar, Weight w) {
  for (std::size_t i = 0; i < w.rank_; ++i) w.coords_[i] *= scalar;
  return w;
}

std::int64_t doubled_dot(const Weight& a, const Weight& b) {
  check_same_rank(a, b, "inner product");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.rank_; ++i) {
    acc += static_cast<std::int64_t>(a.coords_[i]) * b.coords_[i];
  }
  return acc;
}

Weight Weight::appended(int doubled_value) const {
  Weight w(rank_ + 1u);
  std::copy_n(coords_.begin(), rank_, w.coords_.begin());
  w.coords_[rank_] = doubled_value;
  return w;
}

Weight Weight::without(std::size_t index) const {
  if (index >= rank_) throw DomainError("coordinate index out of range");
  Weight w(rank_ - 1u);
  std::size_t out = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i != index) w.coords_[out++] = coords_[i];
  }
  return w;
}

Weight Weight::head(std::size_t count) const {
  if (count > rank_) throw DomainError("head longer than weight");
  Weight w(count);
  std::copy_n(coords_.begin(), count, w.coords_.begin());
  return w;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) os << ',';
    if (coords_[i] % 2 == 0) {
      os << coords_[i] / 2;
    } else {
      os << coords_[i] << "/2";
    }
  }
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  for (std::size_t i = 0; i < a.rank_; ++i) {
    if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const Weight& a, const Weight& b) {
  return a.rank_ == b.rank_ &&
         std::equal(a.coords_.begin(), a.coords_.begin() + a.rank_, b.coords_.begin());
}

std::size_t Weight::hash() const {
  // FNV-1a over the active coordinates.
  std::uint64_t h = 1469598103934665603ull ^ rank_;
  for (std::size_t i = 0; i < rank_; ++i) {
    h ^= static_cast<std::uint32_t>(coords_[i]);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------- SignedPermutation

SignedPermutation SignedPermutation::identity(std::size_t rank) {
  check_rank(rank);
  SignedPermutation s;
  s.rank_ = static_cast<std::uint8_t>(rank);
  for (std::size_t i = 0; i < rank; ++i) s.perm_[i] = static_cast<std::uint8_t>(i);
  return s;
}

SignedPermutation SignedPermutation::reflection(std::size_t rank, std::size_t i) {
  SignedPermutation s = identity(rank);
  if (i >= rank) throw DomainError("reflection index out of range");
  s.flips_ = 1u << i;
  return s;
}

SignedPermutation SignedPermutation::transposition(std::size_t rank, std::size_t i,
                                                   std::size_t j) {
  SignedPermutation s = identity(rank);
  if (i >= rank || j >= rank) throw DomainError("transposition index out of range");
  std::swap(s.perm_[i], s.perm_[j]);
  return s;
}

SignedPermutation SignedPermutation::from_parts(std::span<const int> image,
                                                std::uint32_t flip_mask) {
  SignedPermutation s = identity(image.size());
  std::uint32_t seen = 0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    const int target = image[i];
    if (target < 0 || static_cast<std::size_t>(target) >= image.size() ||
        (seen & (1u << target))) {
      throw DomainError("signed permutation image is not a bijection");
    }
    seen |= 1u << target;
    s.perm_[i] = static_cast<std::uint8_t>(target);
  }
  if (flip_mask >> image.size()) throw DomainError("flip mask exceeds rank");
  s.flips_ = flip_mask;
  return s;
}

int SignedPermutation::flip_count() const { return std::popcount(flips_); }

int SignedPermutation::sign() const {
  // parity of p by counting inversions
  int inversions = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = i + 1; j < rank_; ++j) {
      if (perm_[i] > perm_[j]) ++inversions;
    }
  }
  const int parity = (inversions + flip_count()) % 2;
  return parity == 0 ? 1 : -1;
}

Weight SignedPermutation::apply(const Weight& w) const {
  if (w.rank() != rank_) {
    throw DomainError("Weyl element of rank " + std::to_string(rank_) +
                      " applied to weight of rank " + std::to_string(w.rank()));
  }
  Weight out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    const std::size_t j = perm_[i];
    const int value = w.doubled(i);
    out.set_doubled(j, (flips_ >> j) & 1u ? -value : value);
  }
  return out;
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.rank_ != b.rank_) throw DomainError("composing Weyl elements of different rank");
  // b sends e_i to sb_{b(i)} e_{b(i)}; then a sends e_j to sa_{a(j)} e_{a(j)}.
  SignedPermutation out = SignedPermutation::identity(a.rank_);
  std::uint32_t flips = 0;
  for (std::size_t i = 0; i < a.rank_; ++i) {
    const std::size_t j = b.perm_[i];
    const std::size_t k = a.perm_[j];
    out.perm_[i] = static_cast<std::uint8_t>(k);
    const bool negated = (((b.flips_ >> j) ^ (a.flips_ >> k)) & 1u) != 0;
    if (negated) flips |= 1u << k;
  }
  out.flips_ = flips;
  return out;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) os << ' ';
    os << (i + 1) << "->" << ((flips_ >> perm_[i]) & 1u ? "-" : "+")
       << static_cast<int>(perm_[i]) + 1;
  }
  os << ']';
  return os.str();
}

// ------------------------------------------------------------ Weyl groups

namespace {

std::vector<SignedPermutation> enumerate_weyl(Family series, std::size_t rank) {
  check_rank(rank);
  if (rank == 0) throw DomainError("Weyl group rank must be positive");
  std::vector<int> image(rank);
  std::iota(image.begin(), image.end(), 0);
  std::vector<SignedPermutation> out;
  out.reserve(weyl_group_order(series, rank));
  do {
    for (std::uint32_t mask = 0; mask < (1u << rank); ++mask) {
      if (series == Family::D && std::popcount(mask) % 2 != 0) continue;
      out.push_back(SignedPermutation::from_parts(image, mask));
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace

const std::vector<SignedPermutation>& weyl_group(Family series, std::size_t rank) {
  static std::mutex mutex;
  static std::map<std::pair<Family, std::size_t>,
                  std::unique_ptr<const std::vector<SignedPermutation>>>
      cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{series, rank}];
  if (!slot) {
    slot = std::make_unique<const std::vector<SignedPermutation>>(enumerate_weyl(series, rank));
  }
  return *slot;
}

void for_each_weyl_element(Family series, std::size_t rank,
                           const std::function<void(const SignedPermutation&)>& visit) {
  for (const auto& omega : weyl_group(series, rank)) visit(omega);
}

std::size_t weyl_group_order(Family series, std::size_t rank) {
  std::size_t order = 1;
  for (std::size_t i = 2; i <= rank; ++i) order *= i;
  order <<= rank;
  if (series == Family::D) order >>= 1;
  return order;
}

// ---------------------------------------------------------- root systems

std::vector<Weight> positive_roots(Family series, std::size_t rank) {
  std::vector<Weight> roots;
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      roots.push_back(Weight::unit(rank, i) - Weight::unit(rank, j));
      roots.push_back(Weight::unit(rank, i) + Weight::unit(rank, j));
    }
  }
  if (series == Family::B) {
    for (std::size_t i = 0; i < rank; ++i) roots.push_back(Weight::unit(rank, i));
  }
  return roots;
}

Weight rho(Family series, std::size_t rank) {
  // B_r: rho_i = r - i + 1/2;  D_r: rho_i = r - i  (1-based i)
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    const int r_minus_i = static_cast<int>(rank - i - 1);
    w.set_doubled(i, series == Family::B ? 2 * r_minus_i + 1 : 2 * r_minus_i);
  }
  return w;
}

int minimum_n(Family family) { return family == Family::B ? 2 : 1; }

std::size_t RootData::g_rank() const {
  return static_cast<std::size_t>(n) + (family == Family::B ? 1 : 2);
}

RootData make_root_data(Family family, int n) {
  if (n < minimum_n(family)) {
    throw DomainError(std::string("family ") + family_name(family) + " requires n >= " +
                      std::to_string(minimum_n(family)) + ", got n = " + std::to_string(n));
  }
  const auto un = static_cast<std::size_t>(n);
  RootData data;
  data.family = family;
  data.n = n;
  const std::size_t g_rank = data.g_rank();
  if (g_rank > Weight::kMaxRank) throw DomainError("n too large for this build");

  data.positive_roots_g = positive_roots(family, g_rank);
  data.positive_roots_k = positive_roots(k_series(family), un);
  data.positive_roots_h = {Weight::unit(1, 0)};
  data.rho_g = rho(family, g_rank);
  data.rho_k = rho(k_series(family), un);
  data.rho_h = Weight::from_doubled({1});

  const std::size_t kh = un + 1;
  const std::size_t last = un;
  for (std::size_t i = 0; i < un; ++i) {
    data.sigma_prime.push_back(Weight::unit(kh, i) + Weight::unit(kh, last));
    data.sigma_prime.push_back(Weight::unit(kh, i) - Weight::unit(kh, last));
  }
  data.sigma_double_prime = data.sigma_prime;
  data.sigma_double_prime.push_back(-Weight::unit(kh, last));

  data.sigma = data.sigma_prime;
  for (std::size_t i = 0; i < un; ++i) data.sigma.push_back(Weight::unit(kh, i));
  if (family == Family::D) data.sigma.push_back(-Weight::unit(kh, last));
  return data;
}

// ------------------------------------------------------------- predicates

bool is_dominant(Family series, const Weight& w) {
  const std::size_t r = w.rank();
  if (r == 0) return true;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    if (i + 2 == r && series == Family::D) {
      if (w.doubled(i) < std::abs(w.doubled(i + 1))) return false;
    } else if (w.doubled(i) < w.doubled(i + 1)) {
      return false;
    }
  }
  if (series == Family::B) return w.doubled(r - 1) >= 0;
  // D_1 has no roots: every weight is dominant.
  return true;
}

std::vector<Weight> dominant_weights(Family series, std::size_t rank, int max_first) {
  std::vector<Weight> out;
  if (rank > Weight::kMaxRank) throw DomainError("rank exceeds Weight::kMaxRank");
  if (rank == 0) return {Weight(0)};
  std::vector<int> c(rank);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int bound) {
    if (i == rank) {
      out.push_back(Weight::from_integers(std::span<const int>(c)));
      return;
    }
    const int low = (series == Family::D && i + 1 == rank) ? -bound : 0;
    for (int v = low; v <= bound; ++v) {
      c[i] = v;
      rec(i + 1, v < 0 ? -v : v);
    }
  };
  // D_1: any integer, cap by |w_1|
  if (series == Family::D && rank == 1) {
    for (int v = -max_first; v <= max_first; ++v) out.push_back(Weight::from_integers({v}));
    return out;
  }
  rec(0, max_first);
  std::sort(out.begin(), out.end());
  return out;
}

Weight dominant_representative(Family series, const Weight& w) {
  const std::size_t r = w.rank();
  std::array<int, Weight::kMaxRank> mags{};
  int negatives = 0;
  bool has_zero = false;
  for (std::size_t i = 0; i < r; ++i) {
    const int v = w.doubled(i);
    if (v < 0) ++negatives;
    if (v == 0) has_zero = true;
    mags[i] = std::abs(v);
  }
  std::sort(mags.begin(), mags.begin() + static_cast<std::ptrdiff_t>(r), std::greater<>());
  Weight out = Weight::from_doubled(std::span<const int>(mags.data(), r));
  if (series == Family::D && r >= 2 && negatives % 2 == 1 && !has_zero) {
    out.set_doubled(r - 1, -out.doubled(r - 1));
  }
  if (series == Family::D && r == 1) return w;
  return out;
}

void require_g_weight(Family family, int n, const Weight& lambda) {
  const std::size_t rank = static_cast<std::size_t>(n) + (family == Family::B ? 1 : 2);
  if (lambda.rank() != rank) {
    throw DomainError(std::string("family ") + family_name(family) + " n=" + std::to_string(n) +
                      " expects lambda of rank " + std::to_string(rank) + ", got " +
                      lambda.to_string());
  }
  if (!lambda.is_integral()) throw DomainError("lambda must be integral: " + lambda.to_string());
  if (!is_dominant(family, lambda)) {
    throw DomainError("lambda " + lambda.to_string() + " is not G-dominant");
  }
}

void require_k_weight(Family family, int n, const Weight& mu) {
  if (mu.rank() != static_cast<std::size_t>(n)) {
    throw DomainError("expected mu of rank " + std::to_string(n) + ", got " + mu.to_string());
  }
  if (!mu.is_integral()) throw DomainError("mu must be integral: " + mu.to_string());
  if (!is_dominant(k_series(family), mu)) {
    throw DomainError("mu " + mu.to_string() + " is not K-dominant");
  }
}

bool interlace(InterlaceKind kind, Family family, const Weight& lambda, const Weight& mu) {
  const int n = static_cast<int>(mu.rank());
  require_g_weight(family, n, lambda);
  require_k_weight(family, n, mu);
  // 1-based accessors; lambda beyond its rank reads as 0, mu_0 = mu_{-1} = lambda_1.
  auto lam = [&](int i) {
    return i >= 1 && i <= static_cast<int>(lambda.rank()) ? lambda.doubled(i - 1) : 0;
  };
  auto m = [&](int i) { return i >= 1 ? mu.doubled(i - 1) : lam(1); };

  if (kind == InterlaceKind::Simple) {
    for (int i = 1; i <= n; ++i) {
      const int mi = family == Family::B ? std::abs(m(i)) : m(i);
      if (!(lam(i) >= mi && mi >= lam(i + 1))) return false;
    }
    return true;
  }
  if (family == Family::B) {
    for (int i = 1; i <= n - 1; ++i) {
      if (!(lam(i) >= m(i) && m(i) >= lam(i + 3))) return false;
    }
    return lam(n) >= std::abs(m(n));
  }
  for (int i = 1; i <= n - 2; ++i) {
    if (!(lam(i) >= m(i) && m(i) >= lam(i + 3))) return false;
  }
  // For n = 1 the middle condition reads lambda_1 >= |lambda_3| (mu_0 = lambda_1).
  if (n >= 2 && lam(n - 1) < m(n - 1)) return false;
  if (m(n - 1) < std::abs(lam(n + 2))) return false;
  return lam(n) >= m(n);
}

Weight tilde(Family /*family*/, const Weight& w) {
  if (w.rank() == 0) return w;
  Weight out = w;
  out.set_doubled(w.rank() - 1, -w.doubled(w.rank() - 1));
  return out;
}

Weight restrict(Family family, const Weight& w) {
  if (family == Family::B) return w;
  if (w.rank() < 3) throw DomainError("family D restriction needs rank >= 3");
  return w.without(w.rank() - 2);
}

}  // namespace sobranch
