#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sobranch/kostant.hpp"
#include "sobranch/oracle.hpp"

namespace sobranch::cli {

enum class Method { KostantFull, KostantReduced, Tsukamoto, ClosedForm, Ending, Oracle };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view text);
/// "all" or a comma-separated list; std::invalid_argument on unknown names.
std::vector<Method> parse_methods(std::string_view text);
const std::vector<Method>& all_methods();

/// "1,0,-1" -> weight; std::invalid_argument on junk.
Weight parse_weight(std::string_view text);

struct ResultRow {
  Weight mu;
  int k = 0;
  Method method = Method::KostantFull;
  std::optional<Count> multiplicity;  // nullopt: method not applicable

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct Report {
  Family family = Family::B;
  int n = 0;
  Weight lambda;
  std::vector<ResultRow> results;

  void sort();
  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// nullopt when the method does not apply to q. `oracle` may be null, in
/// which case the oracle table is computed on demand.
std::optional<Count> evaluate(Method m, const BranchingQuery& q,
                              const MultiplicityTable* oracle = nullptr);

/// Entry point. Exit codes: 0 ok, 1 divergence, 2 usage error, 3 internal error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sobranch::cli
