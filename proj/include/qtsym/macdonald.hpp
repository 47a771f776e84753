#pragma once

// Modified Macdonald polynomials and the nabla operator.

#include <optional>
#include <vector>

#include "qtsym/symfun.hpp"

namespace qtsym {

/// Fundamental expansion of H~_mu from the inv/maj statistics on all
/// bijective fillings of mu.
FundVector htilde_fund(const Partition& mu);

/// K~_{lambda,mu}(q,t) for every lambda |- |mu|; cached.
const Expansion& kostka_column(const Partition& mu);

SymFun htilde(const Partition& mu, int trunc = kDefaultTrunc);

/// nabla applied gradewise; grades must be at most `trunc` of f.
SymFun nabla(const SymFun& f);

struct PositivityEntry {
    Partition lambda;
    QTRat coeff;
    std::optional<QTPoly> polynomial;
    bool nonnegative = false;
};

struct PositivityReport {
    std::vector<PositivityEntry> entries;
    bool verdict = true;
};

/// Schur coefficients of sign * nabla f with their positivity verdicts.
PositivityReport nabla_positivity_report(const SymFun& f, int sign);

}  // namespace qtsym
