#include "sobranch/partition.hpp"

#include <cstdlib>
#include <string>

namespace sobranch {

std::size_t default_cache_entries() {
  constexpr std::size_t kDefault = std::size_t{1} << 20;
  const char* env = std::getenv("SOBRANCH_CACHE_ENTRIES");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') return kDefault;
  return static_cast<std::size_t>(value);
}

namespace {

// Perceptron search for an integer functional that is strictly positive on
// every generator. It terminates exactly when the generators lie in an open
// half-space, i.e. when every partition count is finite.
Weight positive_functional(const std::vector<Weight>& generators, std::size_t rank) {
  Weight f(rank);
  for (const auto& g : generators) {
    if (g == Weight(rank)) {
      throw DomainError("zero generator: partition counts would be infinite");
    }
  }
  constexpr int kMaxPasses = 10000;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    bool changed = false;
    for (const auto& g : generators) {
      if (doubled_dot(f, g) <= 0) {
        f += g;
        changed = true;
      }
    }
    if (!changed) return f;
  }
  throw DomainError("generators do not lie in an open half-space: partition counts are infinite");
}

}  // namespace

PartitionCounter::PartitionCounter(std::vector<Weight> generators, std::size_t max_cache_entries)
    : generators_(std::move(generators)), max_entries_(max_cache_entries) {
  if (!generators_.empty()) rank_ = generators_.front().rank();
  for (const auto& g : generators_) {
    if (g.rank() != rank_) throw DomainError("partition generators must share one rank");
    if (!g.is_integral()) throw DomainError("partition generators must be integral");
  }
  functional_ = positive_functional(generators_, rank_);
  for (const auto& g : generators_) generator_heights_.push_back(doubled_dot(functional_, g));
}

std::int64_t PartitionCounter::height(const Weight& w) const { return doubled_dot(functional_, w); }

std::size_t PartitionCounter::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

Count PartitionCounter::operator()(const Weight& target) const {
  if (generators_.empty()) {
    return target == Weight(target.rank()) ? 1 : 0;
  }
  if (target.rank() != rank_) {
    throw DomainError("partition target " + target.to_string() + " has rank " +
                      std::to_string(target.rank()) + ", generators have rank " +
                      std::to_string(rank_));
  }
  if (!target.is_integral()) return 0;
  return count_from(0, target);
}

Count PartitionCounter::count_from(std::size_t index, const Weight& residual) const {
  const std::int64_t h = height(residual);
  if (h < 0) return 0;
  if (h == 0) return residual == Weight(rank_) ? 1 : 0;
  if (index == generators_.size()) return 0;

  const Weight& g = generators_[index];
  const std::int64_t gh = generator_heights_[index];
  if (index + 1 == generators_.size()) {
    // residual must be c * g for a single non-negative integer c
    if (h % gh != 0) return 0;
    const auto c = static_cast<int>(h / gh);
    return residual == c * g ? 1 : 0;
  }

  const Key key{index, residual};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }

  Count total = 0;
  Weight rest = residual;
  for (std::int64_t c = 0; c * gh <= h; ++c) {
    total = checked_add(total, count_from(index + 1, rest));
    rest -= g;
  }

  std::lock_guard lock(mutex_);
  if (cache_.size() >= max_entries_) cache_.clear();
  if (max_entries_ > 0) cache_.emplace(key, total);
  return total;
}

Count count_vector_partitions(std::span<const Weight> generators, const Weight& target) {
  if (generators.empty()) {
    return target == Weight(target.rank()) ? 1 : 0;
  }
  if (generators.front().rank() != target.rank()) {
    throw DomainError("partition target and generators differ in rank");
  }
  PartitionCounter counter(std::vector<Weight>(generators.begin(), generators.end()));
  return counter(target);
}

Count count_sigma_prime(std::size_t n, const Weight& target) {
  if (target.rank() != n + 1) {
    throw DomainError("count_sigma_prime: target must have rank n+1");
  }
  if (!target.is_integral()) return 0;
  // Coordinate i (< n) is a_i + b_i; the last coordinate is sum (a_i - b_i).
  int span = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int v = target.doubled(i) / 2;
    if (v < 0) return 0;
    span += v;
  }
  const int wanted = target.doubled(n) / 2;
  if (std::abs(wanted) > span) return 0;

  // balance[b + span] = number of choices so far with sum (a_i - b_i) = b
  std::vector<Count> balance(2 * static_cast<std::size_t>(span) + 1, 0);
  std::vector<Count> next(balance.size(), 0);
  balance[static_cast<std::size_t>(span)] = 1;
  int reach = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int v = target.doubled(i) / 2;
    std::fill(next.begin(), next.end(), 0);
    for (int b = -reach; b <= reach; ++b) {
      const Count ways = balance[static_cast<std::size_t>(b + span)];
      if (ways == 0) continue;
      for (int d = -v; d <= v; d += 2) {
        auto& slot = next[static_cast<std::size_t>(b + d + span)];
        slot = checked_add(slot, ways);
      }
    }
    reach += v;
    balance.swap(next);
  }
  return balance[static_cast<std::size_t>(wanted + span)];
}

Weight beta(std::size_t n, std::uint32_t mask) {
  Weight w(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1u) w.set_doubled(i, 2);
  }
  return w;
}

}  // namespace sobranch
