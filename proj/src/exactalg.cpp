#include "qtsym/exactalg.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <utility>

namespace qtsym {

// ---------------------------------------------------------------------------
// QTPoly
// ---------------------------------------------------------------------------

namespace {

bool term_order(const Term& a, const Term& b) { return a.mono > b.mono; }

}  // namespace

QTPoly::QTPoly(long c) {
    if (c != 0) terms_.push_back({{0, 0}, Rational(c)});
}

// mpq_class(a, b) does not reduce; every coefficient entering a QTPoly is reduced here.
QTPoly::QTPoly(const Rational& c) {
    if (c != 0) {
        terms_.push_back({{0, 0}, c});
        terms_.back().coeff.canonicalize();
    }
}

QTPoly::QTPoly(std::vector<Term> terms) : terms_(std::move(terms)) {
    for (auto& term : terms_) term.coeff.canonicalize();
    canonicalize();
}

QTPoly QTPoly::monomial(const Rational& c, int q_exp, int t_exp) {
    QTPoly p;
    if (c != 0) {
        p.terms_.push_back({{q_exp, t_exp}, c});
        p.terms_.back().coeff.canonicalize();
    }
    return p;
}

void QTPoly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), term_order);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& term : terms_) {
        if (!out.empty() && out.back().mono == term.mono) {
            out.back().coeff += term.coeff;
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(std::move(term));
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
}

bool QTPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{});
}

bool QTPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].mono == Monomial{} && terms_[0].coeff == 1;
}

std::optional<Rational> QTPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (is_constant()) return terms_[0].coeff;
    return std::nullopt;
}

int QTPoly::min_q() const {
    int m = 0;
    bool first = true;
    for (const auto& term : terms_) {
        if (first || term.mono.q < m) m = term.mono.q;
        first = false;
    }
    return m;
}

int QTPoly::max_q() const { return terms_.empty() ? 0 : terms_.front().mono.q; }

int QTPoly::min_t() const {
    int m = 0;
    bool first = true;
    for (const auto& term : terms_) {
        if (first || term.mono.t < m) m = term.mono.t;
        first = false;
    }
    return m;
}

int QTPoly::max_t() const {
    int m = 0;
    bool first = true;
    for (const auto& term : terms_) {
        if (first || term.mono.t > m) m = term.mono.t;
        first = false;
    }
    return m;
}

QTPoly QTPoly::operator-() const {
    QTPoly r = *this;
    for (auto& term : r.terms_) term.coeff = -term.coeff;
    return r;
}

namespace {

// Merge two sorted term lists with the sign applied to b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono > a[i].mono) {
            out.push_back({b[j].mono, negate_b ? Rational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational c = negate_b ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (c != 0) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

namespace {

// Least common multiple of the coefficient denominators.
Integer denominator_lcm(const std::vector<Term>& terms) {
    Integer l = 1;
    for (const auto& term : terms)
        if (term.coeff.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), term.coeff.get_den_mpz_t());
    return l;
}

}  // namespace

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    QTPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    if (b.terms_.size() == 1) {
        r.terms_.reserve(a.terms_.size());
        for (const auto& x : a.terms_) r.terms_.push_back({x.mono * b.terms_[0].mono, x.coeff * b.terms_[0].coeff});
        return r;
    }
    if (a.terms_.size() == 1) return b * a;
    const long qlo = static_cast<long>(a.min_q()) + b.min_q(), qhi = static_cast<long>(a.max_q()) + b.max_q();
    const long tlo = static_cast<long>(a.min_t()) + b.min_t(), thi = static_cast<long>(a.max_t()) + b.max_t();
    const long width = thi - tlo + 1, cells = (qhi - qlo + 1) * width;
    const long pairs = static_cast<long>(a.terms_.size()) * static_cast<long>(b.terms_.size());
    if (cells <= std::max(4 * pairs, 4096L) && cells <= 4000000L) {
        // Dense integer accumulation; the cells come out already in term order.
        Integer da = denominator_lcm(a.terms_), db = denominator_lcm(b.terms_);
        std::vector<Integer> ia, ib;
        ia.reserve(a.terms_.size());
        ib.reserve(b.terms_.size());
        for (const auto& x : a.terms_) ia.push_back(Integer(x.coeff * da));
        for (const auto& y : b.terms_) ib.push_back(Integer(y.coeff * db));
        std::vector<Integer> acc(cells);
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            for (std::size_t j = 0; j < b.terms_.size(); ++j) {
                long q = static_cast<long>(a.terms_[i].mono.q) + b.terms_[j].mono.q - qlo;
                long t = static_cast<long>(a.terms_[i].mono.t) + b.terms_[j].mono.t - tlo;
                mpz_addmul(acc[q * width + t].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
            }
        Integer den = da * db;
        for (long q = qhi - qlo; q >= 0; --q)
            for (long t = width - 1; t >= 0; --t) {
                Integer& v = acc[q * width + t];
                if (v == 0) continue;
                Rational c(v, den);
                if (den != 1) c.canonicalize();
                r.terms_.push_back({{static_cast<int>(q + qlo), static_cast<int>(t + tlo)}, std::move(c)});
            }
        return r;
    }
    r.terms_.reserve(pairs);
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) r.terms_.push_back({x.mono * y.mono, x.coeff * y.coeff});
    r.canonicalize();
    return r;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) {
    *this = *this * o;
    return *this;
}

bool operator==(const QTPoly& a, const QTPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

QTPoly QTPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    Rational k = c;
    k.canonicalize();
    QTPoly r = *this;
    for (auto& term : r.terms_) term.coeff *= k;
    return r;
}

QTPoly QTPoly::shifted(int dq, int dt) const {
    QTPoly r = *this;
    for (auto& term : r.terms_) {
        term.mono.q += dq;
        term.mono.t += dt;
    }
    return r;
}

QTPoly QTPoly::pow(int e) const {
    if (e < 0) {
        if (!is_monomial()) throw ArithmeticError("negative power of a non-monomial polynomial");
        const auto& term = terms_[0];
        return monomial(Rational(1) / term.coeff, -term.mono.q, -term.mono.t).pow(-e);
    }
    QTPoly result(1);
    QTPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

QTPoly QTPoly::substitute_power(int k) const {
    QTPoly r = *this;
    for (auto& term : r.terms_) {
        term.mono.q *= k;
        term.mono.t *= k;
    }
    if (k < 0) r.canonicalize();
    return r;
}

namespace {

Rational rational_pow(const Rational& v, int e) {
    Rational r = 1;
    if (e < 0) {
        if (v == 0) throw ArithmeticError("zero raised to a negative power");
        Rational inv = Rational(1) / v;
        for (int i = 0; i < -e; ++i) r *= inv;
        return r;
    }
    for (int i = 0; i < e; ++i) r *= v;
    return r;
}

}  // namespace

QTPoly QTPoly::eval_q(const Rational& v) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& term : terms_) out.push_back({{0, term.mono.t}, term.coeff * rational_pow(v, term.mono.q)});
    return QTPoly(std::move(out));
}

QTPoly QTPoly::eval_t(const Rational& v) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& term : terms_) out.push_back({{term.mono.q, 0}, term.coeff * rational_pow(v, term.mono.t)});
    return QTPoly(std::move(out));
}

bool QTPoly::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.coeff.get_den() == 1; });
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

std::string power_string(char var, int e) {
    if (e == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace

std::string QTPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& term : terms_) {
        std::string mono;
        if (term.mono.q != 0) mono += power_string('q', term.mono.q);
        if (term.mono.t != 0) {
            if (!mono.empty()) mono += "*";
            mono += power_string('t', term.mono.t);
        }
        bool negative = term.coeff < 0;
        Rational mag = abs(term.coeff);
        std::string body;
        if (mono.empty()) {
            body = qtsym::to_string(mag);
        } else if (mag == 1) {
            body = mono;
        } else {
            body = qtsym::to_string(mag) + "*" + mono;
        }
        if (first) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense integer polynomials: Z[t] and Z[t][q]
// ---------------------------------------------------------------------------

namespace {

using ZP = std::vector<Integer>;  // coefficient i is the t^i coefficient
using BP = std::vector<ZP>;       // coefficient i is the q^i coefficient

void trim(ZP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(BP& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

int deg(const ZP& a) { return static_cast<int>(a.size()) - 1; }
int deg(const BP& a) { return static_cast<int>(a.size()) - 1; }

Integer zp_content(const ZP& a) {
    Integer g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zp_divexact_int(ZP& a, const Integer& c) {
    if (c == 1) return;
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

ZP zp_mul(const ZP& a, const ZP& b) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// a -= c * t^s * b
void zp_submul(ZP& a, const ZP& b, const Integer& c, int s) {
    if (a.size() < b.size() + s) a.resize(b.size() + s, 0);
    for (std::size_t j = 0; j < b.size(); ++j) a[j + s] -= c * b[j];
    trim(a);
}

// a -= c * q^s * b with c in Z[t]
void bp_submul(BP& a, const BP& b, const ZP& c, int s) {
    if (a.size() < b.size() + s) a.resize(b.size() + s);
    for (std::size_t j = 0; j < b.size(); ++j) {
        ZP prod = zp_mul(c, b[j]);
        ZP& dst = a[j + s];
        if (dst.size() < prod.size()) dst.resize(prod.size(), 0);
        for (std::size_t k = 0; k < prod.size(); ++k) dst[k] -= prod[k];
        trim(dst);
    }
    trim(a);
}

ZP zp_scale(const ZP& a, const Integer& c) {
    ZP r = a;
    for (auto& x : r) x *= c;
    trim(r);
    return r;
}

// Exact division over Z; empty when b does not divide a in Z[t].
std::optional<ZP> zp_divide(ZP a, const ZP& b) {
    if (b.empty()) throw ArithmeticError("division by zero polynomial");
    if (a.empty()) return ZP{};
    if (deg(a) < deg(b)) return std::nullopt;
    ZP quot(deg(a) - deg(b) + 1, 0);
    const Integer& lc = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        if (!mpz_divisible_p(a.back().get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
        Integer c;
        mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), lc.get_mpz_t());
        int s = deg(a) - deg(b);
        quot[s] = c;
        zp_submul(a, b, c, s);
    }
    if (!a.empty()) return std::nullopt;
    trim(quot);
    return quot;
}

ZP zp_prem(ZP a, const ZP& b) {
    const Integer& lc = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        Integer c = a.back();
        int s = deg(a) - deg(b);
        for (auto& x : a) x *= lc;
        zp_submul(a, b, c, s);
    }
    return a;
}

void zp_make_primitive(ZP& a) {
    if (a.empty()) return;
    Integer c = zp_content(a);
    if (a.back() < 0) c = -c;
    zp_divexact_int(a, c);
}

ZP zp_gcd(ZP a, ZP b) {
    trim(a);
    trim(b);
    if (a.empty()) {
        zp_make_primitive(b);
        return b;
    }
    if (b.empty()) {
        Integer c = zp_content(a);
        zp_make_primitive(a);
        return zp_scale(a, c);
    }
    Integer ca = zp_content(a), cb = zp_content(b);
    Integer c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    zp_make_primitive(a);
    zp_make_primitive(b);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        if (deg(b) == 0) {
            a = ZP{1};
            break;
        }
        ZP r = zp_prem(a, b);
        a = std::move(b);
        zp_make_primitive(r);
        b = std::move(r);
    }
    zp_make_primitive(a);
    return zp_scale(a, c);
}

ZP bp_content(const BP& a) {
    ZP g;
    for (const auto& c : a) {
        if (c.empty()) continue;
        g = zp_gcd(g, c);
        if (g.size() == 1 && g[0] == 1) break;
    }
    return g;
}

void bp_divexact_zp(BP& a, const ZP& c) {
    if (c.size() == 1 && c[0] == 1) return;
    for (auto& x : a) {
        if (x.empty()) continue;
        auto d = zp_divide(x, c);
        if (!d) throw ArithmeticError("internal: content division failed");
        x = std::move(*d);
    }
}

void bp_make_primitive(BP& a) {
    if (a.empty()) return;
    ZP c = bp_content(a);
    if (a.back().back() < 0) {
        for (auto& x : c) x = -x;
    }
    bp_divexact_zp(a, c);
}

BP bp_prem(BP a, const BP& b) {
    const ZP& lc = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        ZP c = a.back();
        int s = deg(a) - deg(b);
        for (auto& x : a) x = zp_mul(x, lc);
        bp_submul(a, b, c, s);
    }
    return a;
}

std::optional<BP> bp_divide(BP a, const BP& b) {
    if (b.empty()) throw ArithmeticError("division by zero polynomial");
    if (a.empty()) return BP{};
    if (deg(a) < deg(b)) return std::nullopt;
    BP quot(deg(a) - deg(b) + 1);
    const ZP& lc = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        auto c = zp_divide(a.back(), lc);
        if (!c) return std::nullopt;
        int s = deg(a) - deg(b);
        quot[s] = *c;
        bp_submul(a, b, *c, s);
    }
    if (!a.empty()) return std::nullopt;
    trim(quot);
    return quot;
}

BP bp_gcd(BP a, BP b) {
    trim(a);
    trim(b);
    if (a.empty()) {
        bp_make_primitive(b);
        return b;
    }
    if (b.empty()) {
        bp_make_primitive(a);
        return a;
    }
    ZP c = zp_gcd(bp_content(a), bp_content(b));
    bp_make_primitive(a);
    bp_make_primitive(b);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        if (deg(b) == 0) {
            a = BP{ZP{1}};
            break;
        }
        BP r = bp_prem(a, b);
        a = std::move(b);
        bp_make_primitive(r);
        b = std::move(r);
    }
    bp_make_primitive(a);
    for (auto& x : a) x = zp_mul(x, c);
    trim(a);
    return a;
}

// Integral primitive part of a Laurent polynomial:
// p = scale * q^shift.q * t^shift.t * dense, with dense primitive over Z.
struct DenseForm {
    Rational scale;
    Monomial shift;
    BP dense;
};

Rational rational_content(const QTPoly& p) {
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& term : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), term.coeff.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), term.coeff.get_den_mpz_t());
    }
    if (num_gcd == 0) return Rational(0);
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

DenseForm to_dense(const QTPoly& p) {
    DenseForm f;
    f.scale = rational_content(p);
    f.shift = {p.min_q(), p.min_t()};
    if (p.is_zero()) return f;
    int dq = p.max_q() - f.shift.q, dt = p.max_t() - f.shift.t;
    f.dense.assign(dq + 1, ZP(dt + 1, 0));
    for (const auto& term : p.terms()) {
        Rational v = term.coeff / f.scale;
        f.dense[term.mono.q - f.shift.q][term.mono.t - f.shift.t] = v.get_num();
    }
    for (auto& x : f.dense) trim(x);
    trim(f.dense);
    return f;
}

QTPoly from_dense(const BP& d, const Rational& scale, Monomial shift) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d[i].size(); ++j)
            if (d[i][j] != 0)
                terms.push_back({{static_cast<int>(i) + shift.q, static_cast<int>(j) + shift.t}, Rational(d[i][j]) * scale});
    return QTPoly(std::move(terms));
}

}  // namespace

namespace {

// Exact division by b = c1 m1 + c2 m2 with c1, c2 = +-1, by descending
// elimination on a dense integer grid. Returns nullopt when this shortcut
// does not apply or the quotient would leave the grid; the caller then falls
// back to the general algorithm.
std::optional<QTPoly> divide_by_binomial(const QTPoly& a, const QTPoly& b) {
    if (b.size() != 2) return std::nullopt;
    const Term& t1 = b.terms()[0];
    const Term& t2 = b.terms()[1];
    if (abs(t1.coeff) != 1 || abs(t2.coeff) != 1) return std::nullopt;
    const int qlo = a.min_q(), qhi = a.max_q(), tlo = a.min_t(), thi = a.max_t();
    const long width = thi - tlo + 1, cells = static_cast<long>(qhi - qlo + 1) * width;
    if (cells > 4000000L) return std::nullopt;
    Integer den = denominator_lcm(a.terms());
    std::vector<Integer> grid(cells);
    for (const auto& term : a.terms())
        grid[static_cast<long>(term.mono.q - qlo) * width + (term.mono.t - tlo)] = Integer(term.coeff * den);
    const int s1 = t1.coeff > 0 ? 1 : -1, s2 = t2.coeff > 0 ? 1 : -1;
    const int dq = t2.mono.q - t1.mono.q, dt = t2.mono.t - t1.mono.t;
    std::vector<Term> quot;
    for (long q = qhi - qlo; q >= 0; --q)
        for (long t = width - 1; t >= 0; --t) {
            Integer& v = grid[q * width + t];
            if (v == 0) continue;
            Integer c = s1 > 0 ? Integer(v) : Integer(-v);
            long nq = q + dq, nt = t + dt;
            if (nq < 0 || nq > qhi - qlo || nt < 0 || nt >= width) return std::nullopt;
            // remainder -= c * x * (s1 m1 + s2 m2): clears v and updates the m2 image.
            if (s2 > 0)
                grid[nq * width + nt] -= c;
            else
                grid[nq * width + nt] += c;
            Rational coeff(c, den);
            if (den != 1) coeff.canonicalize();
            quot.push_back({{static_cast<int>(q + qlo) - t1.mono.q, static_cast<int>(t + tlo) - t1.mono.t}, coeff});
            v = 0;
        }
    return QTPoly(std::move(quot));
}

}  // namespace

Rational content(const QTPoly& p) { return rational_content(p); }

std::optional<QTPoly> divide_exact(const QTPoly& a, const QTPoly& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
    if (a.is_zero()) return QTPoly{};
    if (b.is_monomial()) {
        const auto& term = b.terms()[0];
        return a.shifted(-term.mono.q, -term.mono.t).scaled(Rational(1) / term.coeff);
    }
    if (auto q = divide_by_binomial(a, b)) return q;
    DenseForm fa = to_dense(a), fb = to_dense(b);
    auto quot = bp_divide(fa.dense, fb.dense);
    if (!quot) return std::nullopt;
    return from_dense(*quot, fa.scale / fb.scale, {fa.shift.q - fb.shift.q, fa.shift.t - fb.shift.t});
}

QTPoly gcd(const QTPoly& a, const QTPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    DenseForm fa = to_dense(a), fb = to_dense(b);
    BP g = bp_gcd(fa.dense, fb.dense);
    return from_dense(g, 1, {0, 0});
}

// ---------------------------------------------------------------------------
// QTRat
// ---------------------------------------------------------------------------

QTRat QTRat::fraction(QTPoly num, QTPoly den) {
    QTRat r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
}

void QTRat::normalize() {
    if (den_.is_zero()) throw ArithmeticError("division by zero");
    if (num_.is_zero()) {
        den_ = QTPoly(1);
        return;
    }
    if (den_.is_one()) return;
    // Units of the Laurent ring move to the numerator.
    int mq = den_.min_q(), mt = den_.min_t();
    if (mq != 0 || mt != 0) {
        den_ = den_.shifted(-mq, -mt);
        num_ = num_.shifted(-mq, -mt);
    }
    if (den_.is_constant()) {
        num_ = num_.scaled(Rational(1) / den_.terms()[0].coeff);
        den_ = QTPoly(1);
        return;
    }
    Rational c = rational_content(den_);
    if (den_.leading().coeff < 0) c = -c;
    if (c != 1) {
        den_ = den_.scaled(Rational(1) / c);
        num_ = num_.scaled(Rational(1) / c);
    }
    if (auto quot = divide_exact(num_, den_)) {
        num_ = std::move(*quot);
        den_ = QTPoly(1);
        return;
    }
    QTPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
        auto n = divide_exact(num_, g);
        auto d = divide_exact(den_, g);
        if (!n || !d) throw ArithmeticError("internal: gcd does not divide");
        num_ = std::move(*n);
        den_ = std::move(*d);
        Rational c2 = rational_content(den_);
        if (den_.leading().coeff < 0) c2 = -c2;
        den_ = den_.scaled(Rational(1) / c2);
        num_ = num_.scaled(Rational(1) / c2);
        if (den_.is_one()) return;
    }
}

std::optional<Rational> QTRat::constant_value() const {
    if (!den_.is_one()) return std::nullopt;
    return num_.constant_value();
}

QTRat QTRat::operator-() const {
    QTRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QTRat& QTRat::operator+=(const QTRat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one()) normalize();
        else if (num_.is_zero()) den_ = QTPoly(1);
        return *this;
    }
    if (o.den_.is_one()) {
        num_ += o.num_ * den_;
        normalize();
        return *this;
    }
    if (den_.is_one()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

QTRat& QTRat::operator-=(const QTRat& o) { return *this += -o; }

QTRat& QTRat::operator*=(const QTRat& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = QTRat();
    num_ *= o.num_;
    if (den_.is_one() && o.den_.is_one()) return *this;
    den_ *= o.den_;
    normalize();
    return *this;
}

QTRat QTRat::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    return fraction(den_, num_);
}

QTRat& QTRat::operator/=(const QTRat& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    return *this *= o.inverse();
}

bool operator==(const QTRat& a, const QTRat& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

QTRat QTRat::scaled(const Rational& c) const {
    if (c == 0) return {};
    QTRat r = *this;
    r.num_ = r.num_.scaled(c);
    return r;
}

QTRat QTRat::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    QTRat result(1);
    QTRat base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

QTRat QTRat::substitute_power(int k) const {
    if (den_.is_one()) return QTRat(num_.substitute_power(k));
    return fraction(num_.substitute_power(k), den_.substitute_power(k));
}

std::string QTRat::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::optional<QTPoly> qt_is_polynomial(const QTRat& a) { return divide_exact(a.num(), a.den()); }

bool qt_is_nonneg_polynomial(const QTRat& a) {
    auto p = qt_is_polynomial(a);
    if (!p) return false;
    for (const auto& term : p->terms()) {
        if (term.coeff < 0 || term.coeff.get_den() != 1) return false;
        if (term.mono.q < 0 || term.mono.t < 0) return false;
    }
    return true;
}

QTRat specialize(const QTRat& a, Variable var, const Rational& value) {
    auto eval = [&](const QTPoly& p) { return var == Variable::q ? p.eval_q(value) : p.eval_t(value); };
    QTPoly linear = var == Variable::q ? QTPoly::q() - QTPoly(value) : QTPoly::t() - QTPoly(value);
    QTPoly num = a.num(), den = a.den();
    QTPoly den_val = eval(den);
    while (den_val.is_zero()) {
        auto d = divide_exact(den, linear);
        auto n = divide_exact(num, linear);
        if (!d) throw ArithmeticError("internal: vanishing denominator without linear factor");
        if (!n) throw ArithmeticError("specialization hits a pole");
        den = std::move(*d);
        num = std::move(*n);
        den_val = eval(den);
    }
    return QTRat::fraction(eval(num), den_val);
}

QTPoly q_integer(int n) {
    QTPoly r;
    for (int i = 0; i < n; ++i) r += QTPoly::q(i);
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    if (n < 0) {
        // (-1)^k binom(k - n - 1, k)
        Integer r = binomial(k - n - 1, k);
        return (k % 2 == 0) ? r : Integer(-r);
    }
    if (k > n) return 0;
    static std::mutex mu;
    static std::vector<std::vector<Integer>> pascal{{1}};
    std::lock_guard lock(mu);
    while (static_cast<long>(pascal.size()) <= n) {
        const auto& prev = pascal.back();
        std::vector<Integer> row(prev.size() + 1);
        row.front() = 1;
        row.back() = 1;
        for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
        pascal.push_back(std::move(row));
    }
    return pascal[n][k];
}

}  // namespace qtsym
