#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "sobranch/clebsch_gordan.hpp"
#include "sobranch/tsukamoto.hpp"
#include "sobranch/u3_so3.hpp"

namespace sobranch::cli {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kDivergence = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

const std::vector<std::pair<Method, std::string_view>> kNames = {
    {Method::KostantFull, "kostant-full"}, {Method::KostantReduced, "kostant-reduced"},
    {Method::Tsukamoto, "tsukamoto"},      {Method::ClosedForm, "closed-form"},
    {Method::Ending, "ending"},            {Method::Oracle, "oracle"},
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
  return s;
}

json weight_json(const Weight& w) { return w.integers(); }

Weight weight_from_json(const json& j) {
  return Weight::from_integers(std::span<const int>(j.get<std::vector<int>>()));
}

std::string bare(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.integer(i));
  }
  return s;
}

enum class Format { Json, Csv, Text };

const std::map<std::string, Format> kFormats{
    {"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};

void print_report(const Report& r, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::Json:
      out << to_json(r).dump(2) << '\n';
      break;
    case Format::Csv:
      out << "family,n,lambda,mu,k,method,multiplicity\n";
      for (const auto& row : r.results) {
        out << family_name(r.family) << ',' << r.n << ",\"" << bare(r.lambda) << "\",\""
            << bare(row.mu) << "\"," << row.k << ',' << method_name(row.method) << ',';
        if (row.multiplicity) out << *row.multiplicity;
        out << '\n';
      }
      break;
    case Format::Text:
      out << "family " << family_name(r.family) << ", n = " << r.n << ", lambda = "
          << r.lambda.to_string() << '\n';
      for (const auto& row : r.results) {
        out << "  mu=" << row.mu.to_string() << " k=" << row.k << "  " << method_name(row.method)
            << ": " << (row.multiplicity ? std::to_string(*row.multiplicity) : "n/a") << '\n';
      }
      break;
  }
}

struct Common {
  std::string family = "B";
  int n = 0;
  std::string lam;
  std::string format = "text";
};

void add_common(CLI::App* sub, Common& c, bool needs_lambda = true) {
  sub->add_option("--family", c.family, "B (SO(2n+3) > SO(2n) x SO(3)) or D (SO(2n+4) > SO(2n+1) x SO(3))")
      ->check(CLI::IsMember({"B", "D", "b", "d"}));
  sub->add_option("--n", c.n, "rank parameter n")->required();
  if (needs_lambda) sub->add_option("--lam", c.lam, "highest weight of G, comma separated")->required();
  sub->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
}

// All mu / k that can carry a nonzero multiplicity: every coordinate of a
// weight of pi_lambda is at most lambda_1.
std::vector<std::pair<Weight, int>> candidate_pairs(Family f, int n, const Weight& lambda, int slack) {
  std::vector<std::pair<Weight, int>> out;
  const int top = lambda.integer(0) + slack;
  for (const auto& mu : dominant_weights(k_series(f), static_cast<std::size_t>(n), top)) {
    for (int k = 0; k <= top; ++k) out.emplace_back(mu, k);
  }
  return out;
}

int sum_abs(const Weight& w) {
  int s = 0;
  for (std::size_t i = 0; i < w.rank(); ++i) s += std::abs(w.integer(i));
  return s;
}

struct Divergence {
  Weight lambda, mu;
  int k = 0;
  std::vector<std::pair<Method, std::optional<Count>>> values;
};

}  // namespace

std::string_view method_name(Method m) {
  for (const auto& [mm, name] : kNames) {
    if (mm == m) return name;
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view text) {
  for (const auto& [m, name] : kNames) {
    if (name == text) return m;
  }
  return std::nullopt;
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> all = [] {
    std::vector<Method> v;
    for (const auto& [m, name] : kNames) v.push_back(m);
    return v;
  }();
  return all;
}

std::vector<Method> parse_methods(std::string_view text) {
  if (text == "all") return all_methods();
  std::vector<Method> out;
  for (auto part : split(text, ',')) {
    part = trim(part);
    const auto m = parse_method(part);
    if (!m) throw std::invalid_argument("unknown method '" + std::string(part) + "'");
    if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
  }
  if (out.empty()) throw std::invalid_argument("no methods given");
  return out;
}

Weight parse_weight(std::string_view text) {
  text = trim(text);
  std::vector<int> coords;
  if (!text.empty()) {
    for (auto part : split(text, ',')) {
      part = trim(part);
      int v = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
        throw std::invalid_argument("bad weight coordinate '" + std::string(part) + "'");
      }
      coords.push_back(v);
    }
  }
  return Weight::from_integers(std::span<const int>(coords));
}

void Report::sort() {
  std::sort(results.begin(), results.end(), [](const ResultRow& a, const ResultRow& b) {
    if (a.mu != b.mu) return a.mu < b.mu;
    if (a.k != b.k) return a.k < b.k;
    return method_name(a.method) < method_name(b.method);
  });
}

json to_json(const Report& r) {
  json results = json::array();
  for (const auto& row : r.results) {
    results.push_back({{"mu", weight_json(row.mu)},
                       {"k", row.k},
                       {"method", std::string(method_name(row.method))},
                       {"multiplicity", row.multiplicity ? json(*row.multiplicity) : json(nullptr)}});
  }
  return {{"family", std::string(1, family_name(r.family))},
          {"n", r.n},
          {"lambda", weight_json(r.lambda)},
          {"results", results}};
}

Report report_from_json(const json& j) {
  Report r;
  r.family = parse_family(j.at("family").get<std::string>());
  r.n = j.at("n").get<int>();
  r.lambda = weight_from_json(j.at("lambda"));
  for (const auto& e : j.at("results")) {
    ResultRow row;
    row.mu = weight_from_json(e.at("mu"));
    row.k = e.at("k").get<int>();
    const auto m = parse_method(e.at("method").get<std::string>());
    if (!m) throw std::invalid_argument("unknown method in report");
    row.method = *m;
    if (!e.at("multiplicity").is_null()) row.multiplicity = e.at("multiplicity").get<Count>();
    r.results.push_back(row);
  }
  return r;
}

std::optional<Count> evaluate(Method m, const BranchingQuery& q, const MultiplicityTable* oracle) {
  validate(q);
  switch (m) {
    case Method::KostantFull:
      return multiplicity_kostant_full(q);
    case Method::KostantReduced:
      if (!interlace(InterlaceKind::Simple, q.family, q.lambda, q.mu)) return std::nullopt;
      return multiplicity_kostant_reduced(q);
    case Method::Tsukamoto:
      return multiplicity_tsukamoto(q);
    case Method::ClosedForm:
      if (!interlace(InterlaceKind::Simple, q.family, q.lambda, q.mu)) return std::nullopt;
      return (q.family == Family::B ? closed_form_B(q.lambda, q.mu) : closed_form_D(q.lambda, q.mu))
          .mult(q.k);
    case Method::Ending:
      if (q.family == Family::B) {
        if (!ending_pattern_B(q.lambda, q.mu)) return std::nullopt;
        return ending_B(q.lambda, q.mu).mult(q.k);
      }
      if (!ending_pattern_D(q.lambda, q.mu)) return std::nullopt;
      return ending_D(q.lambda, q.mu).mult(q.k);
    case Method::Oracle: {
      MultiplicityTable local;
      if (oracle == nullptr) {
        local = branch_oracle(q.family, q.n, q.lambda);
        oracle = &local;
      }
      auto it = oracle->find({q.mu, q.k});
      return it == oracle->end() ? 0 : it->second;
    }
  }
  return std::nullopt;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("sobranch");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branching multiplicities for SO(N) > SO(N-3) x SO(3)"};
  app.require_subcommand(1);

  Common mult_c, dec_c, ver_c;
  std::string mult_mu, mult_methods = "all", dec_methods = "oracle", ver_methods = "all";
  int mult_k = 0, ver_max = 2, ver_jobs = 0;
  std::string fault;

  auto* mult = app.add_subcommand("mult", "multiplicity of sigma_mu x tau_k by each method");
  add_common(mult, mult_c);
  mult->add_option("--mu", mult_mu, "highest weight of K, comma separated")->required();
  mult->add_option("--k", mult_k, "SO(3) label")->required()->check(CLI::NonNegativeNumber);
  mult->add_option("--methods", mult_methods, "all or a comma-separated list");

  auto* dec = app.add_subcommand("decompose", "full K x H decomposition of pi_lambda");
  add_common(dec, dec_c);
  dec->add_option("--methods", dec_methods, "all or a comma-separated list (default oracle)");

  auto* ver = app.add_subcommand("verify", "cross-check methods over a sweep of lambda");
  add_common(ver, ver_c, false);
  ver->add_option("--max", ver_max, "bound on lambda_1")->check(CLI::NonNegativeNumber);
  ver->add_option("--methods", ver_methods, "all or a comma-separated list");
  ver->add_option("--jobs", ver_jobs, "worker threads (0: hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  ver->add_option("--inject-fault", fault, "")->group("");

  std::string u3_lam, u3_format = "text";
  std::optional<int> u3_k;
  auto* u3 = app.add_subcommand("u3so3", "U(3) > SO(3) multiplicities");
  u3->add_option("--lam", u3_lam, "a1,a2,a3 with a1 >= a2 >= a3")->required();
  u3->add_option("--k", u3_k, "SO(3) label (default: all)")->check(CLI::NonNegativeNumber);
  u3->add_option("--format", u3_format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*mult || *dec) {
      const bool is_mult = static_cast<bool>(*mult);
      Common& c = is_mult ? mult_c : dec_c;
      const Family f = parse_family(c.family);
      const Weight lambda = parse_weight(c.lam);
      const auto methods = parse_methods(is_mult ? mult_methods : dec_methods);
      require_g_weight(f, c.n, lambda);
      if (c.n < minimum_n(f)) throw DomainError("n below the family minimum");

      Report report{f, c.n, lambda, {}};
      std::optional<MultiplicityTable> table;
      auto oracle_table = [&]() -> const MultiplicityTable* {
        if (std::find(methods.begin(), methods.end(), Method::Oracle) == methods.end()) return nullptr;
        if (!table) table = branch_oracle(f, c.n, lambda);
        return &*table;
      };
      if (is_mult) {
        const BranchingQuery q{f, c.n, lambda, parse_weight(mult_mu), mult_k};
        validate(q);
        for (Method m : methods) report.results.push_back({q.mu, q.k, m, evaluate(m, q, oracle_table())});
      } else {
        for (const auto& [mu, k] : candidate_pairs(f, c.n, lambda, 0)) {
          const BranchingQuery q{f, c.n, lambda, mu, k};
          for (Method m : methods) {
            const auto v = evaluate(m, q, oracle_table());
            if (v && *v > 0) report.results.push_back({mu, k, m, v});
          }
        }
      }
      report.sort();
      print_report(report, kFormats.at(c.format), out);
      return kOk;
    }

    if (*ver) {
      const Family f = parse_family(ver_c.family);
      const auto methods = parse_methods(ver_methods);
      std::optional<Method> faulty;
      if (!fault.empty()) {
        faulty = parse_method(fault);
        if (!faulty) throw std::invalid_argument("unknown method '" + fault + "'");
      }
      if (ver_c.n < minimum_n(f)) throw DomainError("n below the family minimum");
      const std::size_t g_rank = static_cast<std::size_t>(ver_c.n) + (f == Family::B ? 1 : 2);
      const auto lambdas = dominant_weights(f, g_rank, ver_max);

      unsigned jobs = ver_jobs > 0 ? static_cast<unsigned>(ver_jobs) : std::thread::hardware_concurrency();
      jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(lambdas.size())));

      // first divergence per lambda index; the smallest index wins
      std::vector<std::optional<Divergence>> found(lambdas.size());
      std::vector<long> checked(lambdas.size(), 0);
      std::atomic<std::size_t> next{0};
      std::mutex err_mutex;
      std::exception_ptr failure;
      auto worker = [&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= lambdas.size()) return;
          try {
            const Weight& lambda = lambdas[i];
            const MultiplicityTable table = branch_oracle(f, ver_c.n, lambda);
            const int max_k = sum_abs(lambda) + 1;
            for (const auto& mu : dominant_weights(k_series(f), static_cast<std::size_t>(ver_c.n),
                                                   lambda.integer(0) + 1)) {
              for (int k = 0; k <= max_k && !found[i]; ++k) {
                const BranchingQuery q{f, ver_c.n, lambda, mu, k};
                Divergence d{lambda, mu, k, {}};
                std::optional<Count> ref;
                bool diverged = false;
                for (Method m : methods) {
                  auto v = evaluate(m, q, &table);
                  if (v && faulty && *faulty == m) *v += 1;
                  d.values.emplace_back(m, v);
                  if (!v) continue;
                  if (ref && *ref != *v) diverged = true;
                  if (!ref) ref = v;
                }
                ++checked[i];
                if (diverged) found[i] = std::move(d);
              }
              if (found[i]) break;
            }
          } catch (...) {
            std::lock_guard lock(err_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
      if (failure) std::rethrow_exception(failure);

      long total = 0;
      for (long c : checked) total += c;
      const Divergence* first = nullptr;
      for (const auto& d : found) {
        if (d) {
          first = &*d;
          break;
        }
      }

      const Format fmt = kFormats.at(ver_c.format);
      if (fmt == Format::Json) {
        json methods_json = json::array();
        for (Method m : methods) methods_json.push_back(std::string(method_name(m)));
        json j{{"family", std::string(1, family_name(f))},
               {"n", ver_c.n},
               {"max", ver_max},
               {"methods", methods_json},
               {"lambdas", lambdas.size()},
               {"checked", total},
               {"agree", first == nullptr},
               {"divergence", nullptr}};
        if (first) {
          json values = json::object();
          for (const auto& [m, v] : first->values) values[std::string(method_name(m))] = v ? json(*v) : json(nullptr);
          j["divergence"] = {{"lambda", weight_json(first->lambda)},
                             {"mu", weight_json(first->mu)},
                             {"k", first->k},
                             {"values", values}};
        }
        out << j.dump(2) << '\n';
      } else if (fmt == Format::Csv) {
        out << "family,n,max,lambdas,checked,agree\n"
            << family_name(f) << ',' << ver_c.n << ',' << ver_max << ',' << lambdas.size() << ','
            << total << ',' << (first ? "false" : "true") << '\n';
      } else {
        out << "verify family " << family_name(f) << " n=" << ver_c.n << " lambda_1<=" << ver_max
            << ": " << lambdas.size() << " lambdas, " << total << " (mu,k) points, "
            << (first ? "DIVERGENCE" : "all methods agree") << '\n';
      }
      if (first) {
        err << "divergence at lambda=" << first->lambda.to_string() << " mu=" << first->mu.to_string()
            << " k=" << first->k << ":";
        for (const auto& [m, v] : first->values) {
          err << ' ' << method_name(m) << '=' << (v ? std::to_string(*v) : "n/a");
        }
        err << '\n';
        return kDivergence;
      }
      return kOk;
    }

    if (*u3) {
      const Weight w = parse_weight(u3_lam);
      if (w.rank() != 3) throw std::invalid_argument("--lam needs exactly three entries");
      const U3Weight lam(w.integer(0), w.integer(1), w.integer(2));
      std::vector<int> ks;
      if (u3_k) {
        ks.push_back(*u3_k);
      } else {
        for (int k = 0; k <= lam.p(); ++k) ks.push_back(k);
      }
      const So3MultiSet oracle = u3_restriction_oracle(lam);
      bool agree = true;
      json rows = json::array();
      if (u3_format == "csv") out << "a1,a2,a3,k,closed,oracle\n";
      for (int k : ks) {
        const Count c = u3_to_so3_closed(lam, k);
        const Count o = oracle.mult(k);
        agree = agree && c == o;
        if (u3_format == "json") {
          rows.push_back({{"k", k}, {"closed", c}, {"oracle", o}});
        } else if (u3_format == "csv") {
          out << lam.a1() << ',' << lam.a2() << ',' << lam.a3() << ',' << k << ',' << c << ',' << o << '\n';
        } else {
          out << "k=" << k << " closed=" << c << " oracle=" << o << '\n';
        }
      }
      if (u3_format == "json") {
        out << json{{"lambda", w.integers()}, {"results", rows}}.dump(2) << '\n';
      }
      if (!agree) {
        err << "closed formula and oracle disagree for " << w.to_string() << '\n';
        return kDivergence;
      }
      return kOk;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace sobranch::cli
