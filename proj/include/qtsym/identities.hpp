#pragma once

// Registry of named identity checks with exact two-sided evaluation.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qtsym/symfun.hpp"

namespace qtsym {

class UnknownIdentity : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Integer parameters (n, k, l, a, ...) plus list-valued ones such as a
/// composition alpha.
struct Params {
    std::map<std::string, long> ints;
    std::map<std::string, std::vector<int>> lists;

    long get(const std::string& key) const;
    long get(const std::string& key, long fallback) const;
    bool has(const std::string& key) const { return ints.count(key) || lists.count(key); }
    std::string to_string() const;
};

/// First disagreement: the coefficient label (e.g. "s[2,1]" or "F[1,3]")
/// and both rendered values.
struct Witness {
    std::string term;
    std::string lhs;
    std::string rhs;
};

using Side = std::variant<std::monostate, SymFun, FundVector>;

struct IdentityCheck {
    std::string name;
    Params params;
    Side lhs;
    Side rhs;
    bool verdict = false;
    std::optional<Witness> witness;
    long elapsed_ms = 0;
    /// Free-form findings, e.g. how many objects a search matched.
    std::vector<std::string> notes;
};

enum class MutationKind { sign, qpower };

/// Corrupts one right-hand term of "main": negate it, or multiply it by q.
struct Mutation {
    int term = 0;
    MutationKind kind = MutationKind::sign;
};

struct CheckOptions {
    int trunc = kDefaultTrunc;
    int threads = 1;
    std::uint64_t seed = 1;
    std::optional<Mutation> mutation;
};

struct IdentityInfo {
    std::string name;
    std::string summary;
    std::vector<std::string> params;
};

const std::vector<IdentityInfo>& identity_list();

/// Throws UnknownIdentity or ParameterError.
IdentityCheck check(const std::string& name, const Params& params, const CheckOptions& opts = {});

/// Every registry entry over its parameter sweep up to the given degree, in
/// registry order. Checks run on opts.threads workers.
std::vector<IdentityCheck> check_all(int max_degree, const CheckOptions& opts = {});

/// Parameter sweep used by check_all for one entry.
std::vector<Params> default_sweep(const std::string& name, int max_degree);

/// Number of right-hand terms of "main" at (k, l).
int main_rhs_size(int k, int l);

/// Schur comparison; the witness is the first differing s_lambda.
std::optional<Witness> compare_schur(const SymFun& lhs, const SymFun& rhs);
/// Fundamental comparison; the witness is the first differing F_S.
std::optional<Witness> compare_fund(const FundVector& lhs, const FundVector& rhs);

}  // namespace qtsym
