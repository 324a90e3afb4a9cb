#include "sobranch/kostant.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace sobranch {

void validate(const BranchingQuery& q) {
  if (q.n < minimum_n(q.family)) {
    throw DomainError(std::string("family ") + family_name(q.family) + " requires n >= " +
                      std::to_string(minimum_n(q.family)));
  }
  require_g_weight(q.family, q.n, q.lambda);
  require_k_weight(q.family, q.n, q.mu);
  if (q.k < 0) throw DomainError("k must be non-negative");
}

BranchingQuery tilde_normalized(const BranchingQuery& q) {
  BranchingQuery out = q;
  if (q.family == Family::B) {
    if (q.mu.doubled(q.mu.rank() - 1) < 0) out.mu = tilde(Family::B, q.mu);
  } else {
    if (q.lambda.doubled(q.lambda.rank() - 1) < 0) out.lambda = tilde(Family::D, q.lambda);
  }
  return out;
}

const PartitionCounter& sigma_counter(Family family, int n) {
  static std::mutex mutex;
  static std::map<std::pair<Family, int>, std::unique_ptr<PartitionCounter>> counters;
  std::lock_guard lock(mutex);
  auto& slot = counters[{family, n}];
  if (!slot) slot = std::make_unique<PartitionCounter>(make_root_data(family, n).sigma);
  return *slot;
}

namespace {

// mu + k e_last on the torus of K x H
Weight kh_weight(const BranchingQuery& q) {
  return q.mu.appended(2 * q.k);
}

template <typename Visit>
void for_each_term(const BranchingQuery& q, Visit&& visit) {
  const RootData rd = make_root_data(q.family, q.n);
  const PartitionCounter& counter = sigma_counter(q.family, q.n);
  const Weight shifted = q.lambda + rd.rho_g;
  const Weight target = kh_weight(q);
  for (const auto& omega : weyl_group(q.family, rd.g_rank())) {
    const Weight arg = restrict(q.family, omega.apply(shifted) - rd.rho_g) - target;
    visit(omega, counter(arg));
  }
}

}  // namespace

Count multiplicity_kostant_full(const BranchingQuery& q) {
  validate(q);
  Count total = 0;
  for_each_term(q, [&](const SignedPermutation& omega, Count p) {
    if (p == 0) return;
    total = omega.sign() > 0 ? checked_add(total, p) : checked_add(total, -p);
  });
  if (total < 0) {
    throw InternalInconsistency("Kostant alternating sum is negative for lambda " +
                                q.lambda.to_string() + ", mu " + q.mu.to_string() +
                                ", k " + std::to_string(q.k));
  }
  return total;
}

std::vector<KostantTerm> kostant_nonzero_terms(const BranchingQuery& q) {
  validate(q);
  std::vector<KostantTerm> terms;
  for_each_term(q, [&](const SignedPermutation& omega, Count p) {
    if (p != 0) terms.push_back({omega, omega.sign(), p});
  });
  return terms;
}

Count multiplicity_kostant_reduced(const BranchingQuery& query) {
  validate(query);
  if (!interlace(InterlaceKind::Simple, query.family, query.lambda, query.mu)) {
    throw PreconditionError("reduced Kostant formula requires simple interlacing");
  }
  const BranchingQuery q = tilde_normalized(query);
  const PartitionCounter& p = sigma_counter(q.family, q.n);
  const auto n = static_cast<std::size_t>(q.n);
  const std::size_t kh = n + 1;
  const Weight e = Weight::unit(kh, n);
  // lambda-bar - mu, with mu padded by a zero H coordinate
  const Weight base = restrict(q.family, q.lambda) - q.mu.appended(0);

  Count result = 0;
  if (q.family == Family::B) {
    result = p(base - q.k * e) - p(base + (q.k + 1) * e);
  } else {
    const int l1 = q.lambda.integer(n);      // lambda_{n+1}
    const int l2 = q.lambda.integer(n + 1);  // lambda_{n+2} >= 0 after normalization
    result = p(base - q.k * e) + p(base - (2 * l2 + q.k) * e) -
             p(base + (l1 - l2 + 1 - q.k) * e) - p(base - (l1 + l2 + 1 + q.k) * e);
  }
  if (result < 0) throw InternalInconsistency("reduced Kostant expression is negative");
  return result;
}

}  // namespace sobranch
