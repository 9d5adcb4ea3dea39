#pragma once

// JSON and CSV forms of polynomials, families, reports and the bijection
// targets. Big integers travel as decimal strings.

#include "sieve/bijections.hpp"
#include "sieve/csp.hpp"

#include <json.hpp>

#include <string>

namespace sieve {

using Json = nlohmann::json;

/// Raised on JSON that does not match the expected shape.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const QPolynomial& p);
QPolynomial polynomial_from_json(const Json& j);

Json to_json(const QProductExpr& e);
QProductExpr expr_from_json(const Json& j);

/// {"family":"by_leaves","n":3,"k":2}; degree lists as "degrees":[n1,n2,...].
Json to_json(const CspFamily& f);
CspFamily family_from_json(const Json& j);

/// Only the fields the theorem reads.
Json params_to_json(TheoremId id, const TheoremParams& p);
TheoremParams params_from_json(const Json& j);

Json to_json(const VerificationReport& r, bool with_timing = false);
VerificationReport report_from_json(const Json& j);
/// family,kind,e,d,brute,closed,poly,agree
std::string csv_header();
std::string to_csv_rows(const VerificationReport& r);

/// [[a,b],...]
Json to_json(const NonCrossingMatching& m);
NonCrossingMatching matching_from_json(const Json& j);

/// Block lists with points numbered from 1.
Json to_json(const NonCrossingPartition& p);
NonCrossingPartition partition_from_json(const Json& j);

Json to_json(const Dissection& d);
Dissection dissection_from_json(const Json& j);

Json to_json(const CubicHamiltonianMap& c);
CubicHamiltonianMap cubic_from_json(const Json& j);

}  // namespace sieve
