#pragma once

// Kostant vector partition functions: the number of ways a weight can be
// written as a non-negative integer combination of a fixed multiset of
// generators, duplicates counted as distinct.

#include <cstddef>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "sobranch/errors.hpp"
#include "sobranch/weights.hpp"

namespace sobranch {

/// Memo-cache bound taken from SOBRANCH_CACHE_ENTRIES (default 1 << 20).
std::size_t default_cache_entries();

/// Memoized counter for one generator multiset. Thread-safe; results never
/// depend on the cache state. When the cache reaches its bound it is
/// cleared as a whole.
class PartitionCounter {
 public:
  explicit PartitionCounter(std::vector<Weight> generators,
                            std::size_t max_cache_entries = default_cache_entries());

  PartitionCounter(const PartitionCounter&) = delete;
  PartitionCounter& operator=(const PartitionCounter&) = delete;

  Count operator()(const Weight& target) const;
  Count count(const Weight& target) const { return (*this)(target); }

  const std::vector<Weight>& generators() const { return generators_; }
  std::size_t rank() const { return rank_; }
  std::size_t cache_size() const;
  std::size_t max_cache_entries() const { return max_entries_; }

 private:
  struct Key {
    std::size_t index;
    Weight residual;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return k.residual.hash() * 31u + k.index;
    }
  };

  Count count_from(std::size_t index, const Weight& residual) const;
  std::int64_t height(const Weight& w) const;

  std::vector<Weight> generators_;
  std::size_t rank_ = 0;
  // Strictly positive on every generator; bounds each multiplicity.
  Weight functional_;
  std::vector<std::int64_t> generator_heights_;
  std::size_t max_entries_;

  mutable std::mutex mutex_;
  mutable std::unordered_map<Key, Count, KeyHash> cache_;
};

/// P_generators(target). Non-integral targets count 0; an empty generator
/// list counts 1 for the zero target and 0 otherwise.
Count count_vector_partitions(std::span<const Weight> generators, const Weight& target);

/// P_{Sigma'}(target) for Sigma' = {e_i +- e_{n+1} : 1 <= i <= n}, target of
/// rank n+1, via a balance-tracking dynamic program over the coordinates.
/// n = 0 is accepted (Sigma' empty).
Count count_sigma_prime(std::size_t n, const Weight& target);

/// beta_I = sum_{i in I} e_i for the subset encoded by `mask`, in rank n+1.
Weight beta(std::size_t n, std::uint32_t mask);

}  // namespace sobranch
