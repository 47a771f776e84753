#pragma once

// Exact arithmetic in Q[q^{+-1}, t^{+-1}] and its fraction field Q(q,t).

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtsym {

using Integer = mpz_class;
using Rational = mpq_class;

class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Monomial {
    int q = 0;
    int t = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    Monomial operator*(const Monomial& o) const { return {q + o.q, t + o.t}; }
};

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Laurent polynomial in q and t with rational coefficients.
///
/// Terms are kept sorted by (q-exponent desc, t-exponent desc) with no zero
/// coefficients, so equal polynomials have identical term lists.
class QTPoly {
public:
    QTPoly() = default;
    QTPoly(long c);  // NOLINT: implicit integer constants are convenient
    QTPoly(const Rational& c);  // NOLINT
    explicit QTPoly(std::vector<Term> terms);

    static QTPoly monomial(const Rational& c, int q_exp, int t_exp);
    static QTPoly q(int e = 1) { return monomial(1, e, 0); }
    static QTPoly t(int e = 1) { return monomial(1, 0, e); }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Constant value when the polynomial has no q or t dependence.
    std::optional<Rational> constant_value() const;

    int min_q() const;
    int max_q() const;
    int min_t() const;
    int max_t() const;

    /// Leading term in the (q-major, t) order.
    const Term& leading() const { return terms_.front(); }

    QTPoly operator-() const;
    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    QTPoly& operator*=(const QTPoly& o);
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    friend bool operator==(const QTPoly& a, const QTPoly& b);

    QTPoly scaled(const Rational& c) const;
    QTPoly shifted(int dq, int dt) const;
    QTPoly pow(int e) const;
    /// q -> q^k, t -> t^k; coefficients untouched.
    QTPoly substitute_power(int k) const;
    /// Evaluate q at a rational value, leaving a polynomial in t.
    QTPoly eval_q(const Rational& v) const;
    QTPoly eval_t(const Rational& v) const;

    bool has_integer_coefficients() const;

    /// Canonical rendering, e.g. "q^2*t + q + 2".
    std::string to_string() const;

private:
    std::vector<Term> terms_;
    void canonicalize();
};

/// Exact quotient a / b in the Laurent ring when b divides a, otherwise empty.
std::optional<QTPoly> divide_exact(const QTPoly& a, const QTPoly& b);

/// Primitive gcd over Z[q,t] with monomial factors removed and positive
/// leading coefficient. gcd(0, 0) is 0.
QTPoly gcd(const QTPoly& a, const QTPoly& b);

/// Rational content: positive rational c with p / c integral and primitive.
Rational content(const QTPoly& p);

/// Element of Q(q,t) in canonical form.
///
/// The denominator is a primitive integer polynomial without monomial factors
/// and with positive leading coefficient; numerator and denominator are
/// coprime. A polynomial value always has denominator 1.
class QTRat {
public:
    QTRat() : den_(1) {}
    QTRat(long c) : num_(c), den_(1) {}  // NOLINT
    QTRat(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    QTRat(QTPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT

    /// num / den, normalized. Throws ArithmeticError when den is zero.
    static QTRat fraction(QTPoly num, QTPoly den);

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    std::optional<Rational> constant_value() const;

    QTRat operator-() const;
    QTRat& operator+=(const QTRat& o);
    QTRat& operator-=(const QTRat& o);
    QTRat& operator*=(const QTRat& o);
    QTRat& operator/=(const QTRat& o);
    friend QTRat operator+(QTRat a, const QTRat& b) { return a += b; }
    friend QTRat operator-(QTRat a, const QTRat& b) { return a -= b; }
    friend QTRat operator*(QTRat a, const QTRat& b) { return a *= b; }
    friend QTRat operator/(QTRat a, const QTRat& b) { return a /= b; }
    friend bool operator==(const QTRat& a, const QTRat& b);

    QTRat scaled(const Rational& c) const;
    QTRat inverse() const;
    QTRat pow(int e) const;
    QTRat substitute_power(int k) const;

    std::string to_string() const;

private:
    QTPoly num_;
    QTPoly den_;
    void normalize();
};

/// Polynomial form of a when the denominator divides the numerator.
std::optional<QTPoly> qt_is_polynomial(const QTRat& a);

/// True iff a is a polynomial with nonnegative integer coefficients and
/// nonnegative exponents.
bool qt_is_nonneg_polynomial(const QTRat& a);

enum class Variable { q, t };

/// Specialize one variable at a rational value. Removable singularities are
/// cancelled by dividing out (var - value) before evaluating.
QTRat specialize(const QTRat& a, Variable var, const Rational& value);

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
QTPoly q_integer(int n);

/// Exact binomial coefficient; zero outside 0 <= k <= n, with the
/// generalized value for negative n.
Integer binomial(long n, long k);

std::string to_string(const Rational& r);

}  // namespace qtsym
