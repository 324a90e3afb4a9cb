#include "sobranch/tsukamoto.hpp"

#include <algorithm>
#include <functional>

namespace sobranch {

namespace {

// 1-based views with the boundary conventions used by the boxes:
// lambda beyond its rank is 0, mu_0 = mu_{-1} = lambda_1, mu beyond rank is 0.
struct Indexed {
  const Weight& lambda;
  const Weight& mu;

  int lam(int i) const {
    return i >= 1 && i <= static_cast<int>(lambda.rank()) ? lambda.integer(i - 1) : 0;
  }
  int m(int i) const {
    if (i <= 0) return lam(1);
    return i <= static_cast<int>(mu.rank()) ? mu.integer(i - 1) : 0;
  }
};

void check_l(const ATuple& t) {
  for (int l : t.l) {
    if (l < 1) throw InternalInconsistency("a-tuple produced l_i < 1");
  }
  if (t.l_last_doubled < 1) throw InternalInconsistency("a-tuple produced l_{n+1} < 1/2");
}

}  // namespace

std::vector<ATuple> enumerate_atuples(Family family, const Weight& lambda, const Weight& mu) {
  const int n = static_cast<int>(mu.rank());
  if (n < minimum_n(family)) throw DomainError("a-tuples: n below the family minimum");
  if (!interlace(InterlaceKind::Triple, family, lambda, mu)) return {};

  const Indexed x{lambda, mu};
  const int length = family == Family::B ? n : n + 1;
  std::vector<int> lo(static_cast<std::size_t>(length) + 1), hi(lo.size());
  for (int i = 1; i <= length; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (family == Family::B) {
      if (i < n) {
        lo[ui] = std::max(x.m(i), x.lam(i + 2));
        hi[ui] = std::min(x.m(i - 1), x.lam(i));
      } else {
        lo[ui] = std::max(std::abs(x.m(n)), x.lam(n + 2));
        hi[ui] = std::min(x.m(n - 1), x.lam(n));
      }
    } else {
      if (i <= n) {
        lo[ui] = std::max(x.m(i), x.lam(i + 1));
        hi[ui] = std::min(x.m(i - 2), x.lam(i));
      } else {
        lo[ui] = std::abs(x.lam(n + 2));
        hi[ui] = std::min(x.m(n - 1), x.lam(n + 1));
      }
    }
  }

  std::vector<ATuple> out;
  std::vector<int> a(static_cast<std::size_t>(length) + 1, 0);
  a[0] = x.lam(1);  // a_0 = lambda_1 (only read by family B)

  auto finish = [&] {
    ATuple t;
    t.a.assign(a.begin() + 1, a.end());
    auto A = [&](int i) { return i <= length ? a[static_cast<std::size_t>(i)] : 0; };
    if (family == Family::B) {
      for (int i = 1; i <= n; ++i) {
        t.l.push_back(std::min(x.lam(i), A(i - 1)) - std::max(x.lam(i + 1), A(i)) + 1);
      }
      t.l_last_doubled = 2 * std::min(x.lam(n + 1), A(n)) + 1;
    } else {
      for (int i = 1; i <= n; ++i) {
        t.l.push_back(std::min(x.m(i - 1), A(i)) - std::max(x.m(i), A(i + 1)) + 1);
      }
      t.l_last_doubled = 2 * std::min(x.m(n), A(n + 1)) + 1;
    }
    check_l(t);
    out.push_back(std::move(t));
  };

  std::function<void(int)> rec = [&](int i) {
    if (i > length) {
      finish();
      return;
    }
    const auto ui = static_cast<std::size_t>(i);
    int top = hi[ui];
    if (i > 1) top = std::min(top, a[ui - 1]);  // a weakly decreasing
    for (int v = std::max(lo[ui], 0); v <= top; ++v) {
      a[ui] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

LaurentPoly atuple_term(const ATuple& t) {
  LaurentPoly term = LaurentPoly::odd_binomial(t.l_last_doubled);
  for (int l : t.l) term = term * LaurentPoly::quantum_bracket(l);
  return term;
}

LaurentPoly tsukamoto_generating_function(Family family, const Weight& lambda, const Weight& mu) {
  LaurentPoly sum;
  for (const auto& t : enumerate_atuples(family, lambda, mu)) sum += atuple_term(t);
  return sum;
}

std::map<int, Count> extract_multiplicities(const LaurentPoly& p) {
  if (p.reflected() != -p) {
    throw MalformedSeriesError("generating function is not antisymmetric: " + p.to_string());
  }
  std::map<int, Count> out;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 == 0) {
      throw MalformedSeriesError("generating function has an integral exponent: " + p.to_string());
    }
    if (e < 0) continue;
    if (c < 0) {
      throw MalformedSeriesError("generating function has a negative multiplicity: " +
                                 p.to_string());
    }
    out.emplace((e - 1) / 2, c);
  }
  return out;
}

Count multiplicity_tsukamoto(const BranchingQuery& query) {
  validate(query);
  const BranchingQuery q =
      query.family == Family::D ? tilde_normalized(query) : query;
  const auto m = extract_multiplicities(tsukamoto_generating_function(q.family, q.lambda, q.mu));
  auto it = m.find(q.k);
  return it == m.end() ? 0 : it->second;
}

}  // namespace sobranch
