#pragma once

// Symmetric functions over Q(q,t), stored in the power-sum basis.

#include <map>
#include <stdexcept>
#include <string>

#include "qtsym/combinat.hpp"
#include "qtsym/exactalg.hpp"

namespace qtsym {

constexpr int kDefaultTrunc = 8;

class DegreeOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

class InconsistentSystem : public std::runtime_error {
public:
    InconsistentSystem(const std::string& msg, Subset witness) : std::runtime_error(msg), witness_(witness) {}
    Subset witness() const { return witness_; }

private:
    Subset witness_;
};

enum class Basis { m, e, h, p, s };

std::string basis_name(Basis b);
/// Accepts m/e/h/p/s and the long names monomial, elementary, homogeneous,
/// power, schur.
Basis parse_basis(const std::string& name);

using Expansion = std::map<Partition, QTRat>;

/// Symmetric function with all grades at most trunc().
class SymFun {
public:
    explicit SymFun(int trunc = kDefaultTrunc);
    static SymFun constant(const QTRat& c, int trunc = kDefaultTrunc);
    /// c * p_lambda
    static SymFun power_sum(const Partition& lambda, const QTRat& c = 1, int trunc = kDefaultTrunc);
    static SymFun from_terms(const Expansion& terms, int trunc = kDefaultTrunc);

    int trunc() const { return trunc_; }
    const Expansion& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one(); }
    /// Largest grade present, -1 for zero.
    int max_degree() const;
    int min_degree() const;
    bool is_homogeneous() const { return max_degree() == min_degree(); }
    /// Coefficient of p_lambda.
    QTRat coeff(const Partition& lambda) const;

    SymFun component(int degree) const;
    SymFun with_trunc(int trunc) const;

    void add_term(const Partition& lambda, const QTRat& c);

    SymFun operator-() const;
    SymFun& operator+=(const SymFun& o);
    SymFun& operator-=(const SymFun& o);
    SymFun& operator*=(const SymFun& o);
    friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
    friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
    friend SymFun operator*(const SymFun& a, const SymFun& b);
    friend bool operator==(const SymFun& a, const SymFun& b) { return a.terms_ == b.terms_; }

    SymFun scaled(const QTRat& c) const;
    SymFun pow(int e) const;

    /// Power-sum rendering for diagnostics, e.g. "(q)*p[2] + p[1,1]".
    std::string to_string() const;

private:
    Expansion terms_;
    int trunc_;
};

inline SymFun operator*(const QTRat& c, const SymFun& f) { return f.scaled(c); }

SymFun basis_element(Basis b, const Partition& lambda, int trunc = kDefaultTrunc);
/// Single-part shorthands; degree 0 gives 1 and negative degree gives 0.
SymFun e_n(int n, int trunc = kDefaultTrunc);
SymFun h_n(int n, int trunc = kDefaultTrunc);
SymFun p_n(int n, int trunc = kDefaultTrunc);

/// Coefficients of f in basis b, sorted by partition order, zeros omitted.
Expansion basis_extract(const SymFun& f, Basis b);
/// sum_lambda c_lambda b_lambda
SymFun basis_combine(Basis b, const Expansion& coeffs, int trunc = kDefaultTrunc);

SymFun omega(const SymFun& f);
QTRat hall(const SymFun& f, const SymFun& g);
QTRat star(const SymFun& f, const SymFun& g);
/// <p_mu, p_mu>_* = (-1)^{|mu|-l(mu)} prod (1-t^{mu_i})(1-q^{mu_i}) z_mu
QTPoly star_weight(const Partition& mu);

/// Sum of m_lambda over lambda |- n with every part < k.
SymFun petrie(int k, int n, int trunc = kDefaultTrunc);

/// Degree-n quasisymmetric function in the fundamental basis.
struct FundVector {
    int n = 0;
    std::map<Subset, QTRat> coeffs;

    void add(Subset s, const QTRat& c);
    FundVector& operator+=(const FundVector& o);
    FundVector scaled(const QTRat& c) const;
    friend bool operator==(const FundVector& a, const FundVector& b) { return a.n == b.n && a.coeffs == b.coeffs; }
};

FundVector schur_to_fund(const Partition& lambda);
/// Fundamental expansion of a homogeneous symmetric function of degree n.
FundVector to_fund(const SymFun& f, int n);
/// Schur coefficients of a symmetric quasisymmetric function; throws
/// InconsistentSystem when v is not in the span of the Schur images.
Expansion fund_solve(const FundVector& v);

}  // namespace qtsym
