#pragma once

// Root-system and Weyl-group data for the symmetric pairs
//   family B: (SO(2n+3), SO(2n) x SO(3)),  n >= 2
//   family D: (SO(2n+4), SO(2n+1) x SO(3)), n >= 1
// All weights are written in the epsilon basis and stored doubled so that
// half-integral coordinates (rho, l_{n+1}) stay exact.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sobranch/errors.hpp"

namespace sobranch {

/// Root-system series. For a symmetric pair the family is the series of G;
/// the series of K is the other one (see k_series()).
enum class Family { B, D };

constexpr Family k_series(Family family) {
  return family == Family::B ? Family::D : Family::B;
}

char family_name(Family family);
Family parse_family(std::string_view text);

class Weight {
 public:
  static constexpr std::size_t kMaxRank = 8;

  Weight() = default;
  /// Zero weight of the given rank.
  explicit Weight(std::size_t rank);

  /// Integral weight; this is the only way highest weights enter the library.
  static Weight from_integers(std::span<const int> coords);
  static Weight from_integers(std::initializer_list<int> coords) {
    return from_integers(std::span<const int>(coords.begin(), coords.size()));
  }
  /// Weight given by twice its coordinates.
  static Weight from_doubled(std::span<const int> doubled);
  static Weight from_doubled(std::initializer_list<int> doubled) {
    return from_doubled(std::span<const int>(doubled.begin(), doubled.size()));
  }
  /// The basis vector epsilon_{index} (0-based) of the given rank.
  static Weight unit(std::size_t rank, std::size_t index);

  std::size_t rank() const { return rank_; }
  int doubled(std::size_t i) const { return coords_[i]; }
  void set_doubled(std::size_t i, int value) { coords_[i] = value; }

  bool is_integral() const;
  /// Coordinate i as an integer; DomainError if it is half-integral.
  int integer(std::size_t i) const;
  std::vector<int> integers() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int scalar, Weight w);

  /// Euclidean inner product of the doubled vectors, i.e. 4 <a, b>.
  friend std::int64_t doubled_dot(const Weight& a, const Weight& b);

  /// Copy with the doubled coordinate appended / the coordinate removed.
  Weight appended(int doubled_value) const;
  Weight without(std::size_t index) const;
  /// First `count` coordinates.
  Weight head(std::size_t count) const;

  std::string to_string() const;

  /// Lexicographic on coordinates; weights of different rank order by rank.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);
  friend bool operator==(const Weight& a, const Weight& b);

  std::size_t hash() const;

 private:
  std::array<int, kMaxRank> coords_{};
  std::uint8_t rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

/// Weyl group element omega = s p of a B or D root system: p sends
/// epsilon_i to epsilon_{p(i)}, then s negates the coordinates in `flips`.
class SignedPermutation {
 public:
  SignedPermutation() = default;

  static SignedPermutation identity(std::size_t rank);
  /// s_i: negates coordinate i (0-based).
  static SignedPermutation reflection(std::size_t rank, std::size_t i);
  /// p_{i,j}: swaps coordinates i and j (0-based).
  static SignedPermutation transposition(std::size_t rank, std::size_t i,
                                         std::size_t j);
  /// image[i] = p(i); flip_mask bit j set means coordinate j is negated after
  /// permuting.
  static SignedPermutation from_parts(std::span<const int> image,
                                      std::uint32_t flip_mask);

  std::size_t rank() const { return rank_; }
  int image(std::size_t i) const { return perm_[i]; }
  std::uint32_t flip_mask() const { return flips_; }
  int flip_count() const;

  /// Determinant of the signed permutation matrix.
  int sign() const;

  Weight apply(const Weight& w) const;

  /// (a * b)(w) = a(b(w)).
  friend SignedPermutation operator*(const SignedPermutation& a,
                                     const SignedPermutation& b);
  friend bool operator==(const SignedPermutation& a,
                         const SignedPermutation& b) = default;

  std::string to_string() const;

 private:
  std::array<std::uint8_t, Weight::kMaxRank> perm_{};
  std::uint32_t flips_ = 0;
  std::uint8_t rank_ = 0;
};

inline Weight apply(const SignedPermutation& omega, const Weight& w) {
  return omega.apply(w);
}

/// Every element of W(B_rank) or W(D_rank) exactly once; D keeps only even
/// flip sets. The returned reference stays valid for the program lifetime.
const std::vector<SignedPermutation>& weyl_group(Family series,
                                                 std::size_t rank);

/// Calls `visit` on each element in the same order as weyl_group().
void for_each_weyl_element(
    Family series, std::size_t rank,
    const std::function<void(const SignedPermutation&)>& visit);

std::size_t weyl_group_order(Family series, std::size_t rank);

struct RootData {
  Family family = Family::B;
  int n = 0;
  /// Phi+(g, t) in rank n+1 (B) or n+2 (D).
  std::vector<Weight> positive_roots_g;
  /// Phi+(k) in the n coordinates of K.
  std::vector<Weight> positive_roots_k;
  /// Phi+(h) = {epsilon} in the single coordinate of H.
  std::vector<Weight> positive_roots_h;
  Weight rho_g;
  Weight rho_k;
  Weight rho_h;
  /// Sigma, Sigma' and Sigma'' live on the torus of K x H: rank n+1, the
  /// last coordinate being the H coordinate.
  std::vector<Weight> sigma;
  std::vector<Weight> sigma_prime;
  std::vector<Weight> sigma_double_prime;

  std::size_t g_rank() const;
  std::size_t kh_rank() const { return static_cast<std::size_t>(n) + 1; }
};

/// Smallest n for which the family's results are stated.
int minimum_n(Family family);

RootData make_root_data(Family family, int n);

/// Positive roots of B_rank / D_rank in the lexicographic positive system.
std::vector<Weight> positive_roots(Family series, std::size_t rank);
/// Half the sum of positive roots.
Weight rho(Family series, std::size_t rank);

/// B_r: w_1 >= ... >= w_r >= 0.  D_r: w_1 >= ... >= w_{r-1} >= |w_r|.
bool is_dominant(Family series, const Weight& w);
/// The dominant element of the Weyl orbit of w.
Weight dominant_representative(Family series, const Weight& w);

/// Integral dominant weights of the given rank with first coordinate at most
/// max_first, in lexicographic order.
std::vector<Weight> dominant_weights(Family series, std::size_t rank, int max_first);

enum class InterlaceKind { Simple, Triple };

/// Interlacing predicates between a G-dominant lambda and a K-dominant mu.
/// Throws DomainError on non-dominant input or inconsistent ranks.
bool interlace(InterlaceKind kind, Family family, const Weight& lambda,
               const Weight& mu);

/// Negates the last coordinate (mu for family B, lambda for family D).
Weight tilde(Family family, const Weight& w);

/// Restriction from the torus of G to the torus of K x H: identity for
/// family B, drops coordinate n+1 for family D.
Weight restrict(Family family, const Weight& w);

/// Checks that lambda is G-dominant with rank n+1 (B) / n+2 (D) and integral.
void require_g_weight(Family family, int n, const Weight& lambda);
/// Checks that mu is K-dominant with rank n and integral.
void require_k_weight(Family family, int n, const Weight& mu);

}  // namespace sobranch
