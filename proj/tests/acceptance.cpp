// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "grid.hpp"
#include "sobranch/clebsch_gordan.hpp"
#include "sobranch/kostant.hpp"
#include "sobranch/oracle.hpp"
#include "sobranch/partition.hpp"
#include "sobranch/tsukamoto.hpp"
#include "sobranch/u3_so3.hpp"

using namespace sobranch;
using namespace sobranch::testing;

namespace {

struct Outcome {
  bool pass = true;
  long checks = 0;
  std::string detail;  // first failure

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what();
    }
  }
};

struct Sweep {
  Family family;
  int n;
  int max_first;
};

const std::vector<Sweep> kSweeps = {{Family::B, 2, 3}, {Family::D, 1, 3}, {Family::D, 2, 2}};

std::string where(const BranchingQuery& q) {
  std::ostringstream os;
  os << family_name(q.family) << " n=" << q.n << " lambda=" << q.lambda.to_string()
     << " mu=" << q.mu.to_string() << " k=" << q.k;
  return os.str();
}

Count lookup(const MultiplicityTable& t, const Weight& mu, int k) {
  auto it = t.find({mu, k});
  return it == t.end() ? 0 : it->second;
}

// Oracle tables per lambda, shared by several criteria.
const MultiplicityTable& oracle_table(Family f, int n, const Weight& lambda) {
  static std::map<std::tuple<Family, int, Weight>, MultiplicityTable> cache;
  auto key = std::make_tuple(f, n, lambda);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, branch_oracle(f, n, lambda)).first;
  return it->second;
}

Outcome agreement(const std::vector<Sweep>& sweeps) {
  Outcome o;
  for (const auto& s : sweeps) {
    for_each_query(s.family, s.n, s.max_first, [&](const BranchingQuery& q) {
      const Count full = multiplicity_kostant_full(q);
      const Count ts = multiplicity_tsukamoto(q);
      const Count orc = lookup(oracle_table(q.family, q.n, q.lambda), q.mu, q.k);
      o.expect(full == ts && ts == orc, [&] {
        return where(q) + ": full=" + std::to_string(full) + " tsukamoto=" + std::to_string(ts) +
               " oracle=" + std::to_string(orc);
      });
      if (!interlace(InterlaceKind::Simple, q.family, q.lambda, q.mu)) return;
      const Count red = multiplicity_kostant_reduced(q);
      const Count cf = (q.family == Family::B ? closed_form_B(q.lambda, q.mu)
                                              : closed_form_D(q.lambda, q.mu))
                           .mult(q.k);
      o.expect(red == full && cf == full, [&] {
        return where(q) + ": full=" + std::to_string(full) + " reduced=" + std::to_string(red) +
               " closed=" + std::to_string(cf);
      });
    });
  }
  return o;
}

Outcome vanishing() {
  Outcome o;
  for (const auto& s : kSweeps) {
    for (const auto& lambda : sweep_lambdas(s.family, s.n, s.max_first)) {
      for (const auto& mu : sweep_mus(s.family, s.n, lambda)) {
        const bool triple = interlace(InterlaceKind::Triple, s.family, lambda, mu);
        Count total = 0;
        for (int k = 0; k <= sweep_max_k(lambda); ++k) {
          total += multiplicity_kostant_full({s.family, s.n, lambda, mu, k});
        }
        o.expect(triple == (total > 0), [&] {
          return std::string(1, family_name(s.family)) + " lambda=" + lambda.to_string() +
                 " mu=" + mu.to_string() + (triple ? " interlaces but never occurs" : " occurs without interlacing");
        });
      }
    }
  }
  return o;
}

Outcome doubling() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& nu : integral_targets(n + 1, -6, 6)) {
      Count lhs = 0;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) lhs += count_sigma_prime(n, nu - beta(n, mask));
      const Count rhs = count_sigma_prime(n, 2 * nu);
      o.expect(lhs == rhs, [&] { return "nu=" + nu.to_string(); });
    }
  }
  return o;
}

Outcome staircase() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<Weight> gens;
    for (std::size_t i = 0; i < n; ++i) {
      gens.push_back(Weight::unit(n + 1, i) + Weight::unit(n + 1, n));
      gens.push_back(Weight::unit(n + 1, i) - Weight::unit(n + 1, n));
    }
    gens.push_back(-Weight::unit(n + 1, n));
    const PartitionCounter pdp(gens);
    const Weight last = Weight::unit(n + 1, n);
    for (const auto& nu : integral_targets(n + 1, -6, 6)) {
      for (int m = 0; m <= 6; ++m) {
        Count rhs = pdp(nu + m * last);
        for (int r = 0; r < m; ++r) rhs += count_sigma_prime(n, nu + r * last);
        o.expect(pdp(nu) == rhs, [&] { return "nu=" + nu.to_string() + " m=" + std::to_string(m); });
      }
    }
  }
  return o;
}

Outcome clebsch_gordan() {
  Outcome o;
  std::vector<int> labels;
  std::function<void()> rec = [&] {
    if (!labels.empty()) {
      std::vector<So3MultiSet> factors;
      std::vector<int> doubled;
      int top = 0;
      for (int a : labels) {
        factors.push_back(So3MultiSet::single(a));
        doubled.push_back(2 * a);
        top += a;
      }
      const So3MultiSet d = so3_tensor_decompose(factors);
      for (int k = 0; k <= top + 1; ++k) {
        o.expect(su2_tensor_multiplicity(doubled, 2 * k) == d.mult(k), [&] {
          std::string s = "labels";
          for (int a : labels) s += ' ' + std::to_string(a);
          return s + " k=" + std::to_string(k);
        });
      }
    }
    if (labels.size() == 4) return;
    for (int a = 0; a <= 5; ++a) {
      labels.push_back(a);
      rec();
      labels.pop_back();
    }
  };
  rec();
  return o;
}

Outcome u3() {
  Outcome o;
  for (int a1 = 0; a1 <= 8; ++a1) {
    for (int a2 = 0; a2 <= a1; ++a2) {
      for (int a3 = 0; a3 <= a2; ++a3) {
        const U3Weight lam(a1, a2, a3);
        const So3MultiSet oracle = u3_restriction_oracle(lam);
        for (int k = 0; k <= a1 + a2 + 1; ++k) {
          const auto cases = u3_to_so3_cases(lam.p(), lam.q(), k);
          const auto what = [&] {
            return "lambda'=(" + std::to_string(a1) + "," + std::to_string(a2) + "," +
                   std::to_string(a3) + ") k=" + std::to_string(k);
          };
          o.expect(!cases.empty(), what);
          for (const auto& c : cases) o.expect(c.value == oracle.mult(k), what);
        }
      }
    }
  }
  return o;
}

Outcome ending() {
  Outcome o;
  long hits = 0;
  for (const auto& s : kSweeps) {
    for (const auto& lambda : sweep_lambdas(s.family, s.n, s.max_first)) {
      const auto& table = oracle_table(s.family, s.n, lambda);
      for (const auto& mu : sweep_mus(s.family, s.n, lambda)) {
        const bool pattern = s.family == Family::B ? ending_pattern_B(lambda, mu) : ending_pattern_D(lambda, mu);
        if (!pattern) continue;
        ++hits;
        const So3MultiSet got = s.family == Family::B ? ending_B(lambda, mu) : ending_D(lambda, mu);
        So3MultiSet row;
        for (const auto& [key, m] : table) {
          if (key.first == mu) row.add(key.second, m);
        }
        o.expect(got == row, [&] {
          return std::string(1, family_name(s.family)) + " lambda=" + lambda.to_string() + " mu=" +
                 mu.to_string() + ": ending " + got.to_string() + " oracle " + row.to_string();
        });
      }
    }
  }
  o.expect(hits > 0, [] { return std::string("no sweep point satisfies the coincidence pattern"); });
  return o;
}

Outcome conservation() {
  Outcome o;
  for (const auto& s : kSweeps) {
    for (const auto& lambda : sweep_lambdas(s.family, s.n, s.max_first)) {
      const Count lhs = table_dimension(s.family, oracle_table(s.family, s.n, lambda));
      const Count rhs = weyl_dim(s.family, lambda);
      o.expect(lhs == rhs, [&] { return lambda.to_string() + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs); });
    }
  }
  return o;
}

Outcome character_identity() {
  Outcome o;
  for (const auto& s : kSweeps) {
    const std::size_t r = g_rank(s.family, s.n);
    const Weight rw = rho(s.family, r);
    const CharacterMap denom = xi(s.family, rw);
    o.expect(denom == weyl_denominator_product(s.family, r), [&] { return std::string("denominator product"); });
    for (const auto& lambda : sweep_lambdas(s.family, s.n, s.max_first)) {
      o.expect(weight_multiplicities(s.family, lambda) * denom == xi(s.family, lambda + rw),
               [&] { return lambda.to_string(); });
    }
  }
  return o;
}

Outcome tilde_invariance() {
  Outcome o;
  for (const auto& s : kSweeps) {
    for_each_query(s.family, s.n, s.max_first, [&](const BranchingQuery& q) {
      BranchingQuery t = q;
      if (q.family == Family::B) {
        t.mu = tilde(q.family, q.mu);
      } else {
        t.lambda = tilde(q.family, q.lambda);
      }
      const Count a = multiplicity_kostant_full(q), b = multiplicity_kostant_full(t);
      const Count c = multiplicity_tsukamoto(t);
      const Count d = lookup(oracle_table(t.family, t.n, t.lambda), t.mu, t.k);
      o.expect(a == b && b == c && c == d, [&] { return where(q) + " vs " + where(t); });
    });
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "four-way agreement, family B (n=2, lambda_1<=3)", [] { return agreement({{Family::B, 2, 3}}); }},
      {2, "four-way agreement, family D (n=1, lambda_1<=3; n=2, lambda_1<=2)",
       [] { return agreement({{Family::D, 1, 3}, {Family::D, 2, 2}}); }},
      {3, "vanishing iff triple interlacing", vanishing},
      {4, "doubling identity (n<=3, |nu_i|<=6)", doubling},
      {5, "staircase recursion (m<=6)", staircase},
      {6, "SU(2) partition formula vs pairwise Clebsch-Gordan", clebsch_gordan},
      {7, "U(3)->SO(3) closed formula vs GT oracle, overlaps consistent", u3},
      {8, "ending theorems vs oracle rows", ending},
      {9, "dimension conservation", conservation},
      {10, "Weyl character identity", character_identity},
      {11, "tilde invariance", tilde_invariance},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d. %s  (%ld checks, %.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.checks, secs, o.pass ? "" : "  first failure: ", o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
