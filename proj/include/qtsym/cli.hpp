#pragma once

// Command-line front end: expand, verify, pf, positivity, kostka.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qtsym/identities.hpp"
#include "qtsym/parking.hpp"
#include "qtsym/symfun.hpp"

namespace qtsym {

using Json = nlohmann::ordered_json;

/// {"basis": ..., "terms": [{"partition": [...], "coeff": "..."}]}
Json expansion_to_json(const Expansion& e, Basis b);
/// Inverse of expansion_to_json.
SymFun expansion_from_json(const Json& j, int trunc = kDefaultTrunc);

/// {"n": ..., "basis": "F", "terms": [{"subset": [...], "coeff": "..."}]}
Json fund_to_json(const FundVector& v);

/// {"identity", "params", "verdict", "witness", "elapsed_ms"}, plus "notes"
/// when the check produced any.
Json report_to_json(const IdentityCheck& r);

Json pf_to_json(const ParkingFunction& p, const PFStats& s);
/// One CSV row: n,rows,area,dinv,touch,sigma,ides.
std::string pf_csv_row(const ParkingFunction& p, const PFStats& s);
extern const char* const kPfCsvHeader;

/// Exit codes: 0 success, 1 failed identity or non-positive result, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtsym
