#include "qtsym/symfun.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace qtsym {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::e: return "e";
        case Basis::h: return "h";
        case Basis::p: return "p";
        case Basis::s: return "s";
    }
    return "?";
}

Basis parse_basis(const std::string& name) {
    if (name == "m" || name == "monomial") return Basis::m;
    if (name == "e" || name == "elementary") return Basis::e;
    if (name == "h" || name == "homogeneous") return Basis::h;
    if (name == "p" || name == "power") return Basis::p;
    if (name == "s" || name == "schur") return Basis::s;
    throw std::invalid_argument("unknown basis '" + name + "'");
}

// ---------------------------------------------------------------------------
// SymFun

SymFun::SymFun(int trunc) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("truncation must be nonnegative");
}

SymFun SymFun::constant(const QTRat& c, int trunc) {
    SymFun f(trunc);
    f.add_term(Partition(), c);
    return f;
}

SymFun SymFun::power_sum(const Partition& lambda, const QTRat& c, int trunc) {
    SymFun f(trunc);
    f.add_term(lambda, c);
    return f;
}

SymFun SymFun::from_terms(const Expansion& terms, int trunc) {
    SymFun f(trunc);
    for (const auto& [lam, c] : terms) f.add_term(lam, c);
    return f;
}

int SymFun::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }
int SymFun::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.size(); }

QTRat SymFun::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? QTRat() : it->second;
}

SymFun SymFun::component(int degree) const {
    SymFun r(trunc_);
    for (const auto& [lam, c] : terms_)
        if (lam.size() == degree) r.terms_.emplace_hint(r.terms_.end(), lam, c);
    return r;
}

SymFun SymFun::with_trunc(int trunc) const {
    if (max_degree() > trunc)
        throw DegreeOverflow("degree " + std::to_string(max_degree()) + " exceeds truncation " + std::to_string(trunc));
    SymFun r = *this;
    r.trunc_ = trunc;
    return r;
}

void SymFun::add_term(const Partition& lambda, const QTRat& c) {
    if (lambda.size() > trunc_)
        throw DegreeOverflow("degree " + std::to_string(lambda.size()) + " exceeds truncation " +
                             std::to_string(trunc_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFun SymFun::operator-() const {
    SymFun r = *this;
    for (auto& [lam, c] : r.terms_) c = -c;
    return r;
}

SymFun& SymFun::operator+=(const SymFun& o) {
    trunc_ = std::max(trunc_, o.trunc_);
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
}

SymFun& SymFun::operator-=(const SymFun& o) {
    trunc_ = std::max(trunc_, o.trunc_);
    for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
    return *this;
}

SymFun operator*(const SymFun& a, const SymFun& b) {
    SymFun r(std::max(a.trunc_, b.trunc_));
    if (a.is_zero() || b.is_zero()) return r;
    if (a.max_degree() + b.max_degree() > r.trunc_)
        throw DegreeOverflow("product of degree " + std::to_string(a.max_degree() + b.max_degree()) +
                             " exceeds truncation " + std::to_string(r.trunc_));
    for (const auto& [la, ca] : a.terms_)
        for (const auto& [lb, cb] : b.terms_) r.add_term(la.merged(lb), ca * cb);
    return r;
}

SymFun& SymFun::operator*=(const SymFun& o) { return *this = *this * o; }

SymFun SymFun::scaled(const QTRat& c) const {
    SymFun r(trunc_);
    if (c.is_zero()) return r;
    for (const auto& [lam, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), lam, v * c);
    return r;
}

SymFun SymFun::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of a symmetric function");
    SymFun r = constant(1, trunc_);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

std::string SymFun::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lam, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.to_string() + ")*p" + lam.to_string();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conversion tables

namespace {

using RatExp = std::map<Partition, Rational>;
using Matrix = std::vector<std::vector<Rational>>;

RatExp rat_mul(const RatExp& a, const RatExp& b) {
    RatExp r;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) {
            auto& slot = r[la.merged(lb)];
            slot += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();) it = (it->second == 0) ? r.erase(it) : std::next(it);
    return r;
}

RatExp single_part(int n, bool elementary) {
    RatExp r;
    for (const auto& lam : partitions_of(n)) {
        Rational c(1);
        c /= Rational(z_lambda(lam));
        if (elementary && sign_of(lam) < 0) c = -c;
        r.emplace(lam, c);
    }
    return r;
}

// Gauss-Jordan inverse over Q.
Matrix invert(Matrix a) {
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw ArithmeticError("singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Number of ways to distribute the (labelled) parts of lambda into bins of
// sizes mu exactly: the coefficient of m_mu in p_lambda.
long p_to_m_count(const Partition& lambda, const Partition& mu) {
    std::map<std::vector<int>, long> states;
    states[mu.parts()] = 1;
    for (int part : lambda.parts()) {
        std::map<std::vector<int>, long> next;
        for (const auto& [cap, cnt] : states)
            for (std::size_t i = 0; i < cap.size(); ++i) {
                if (cap[i] < part) continue;
                auto c2 = cap;
                c2[i] -= part;
                next[c2] += cnt;
            }
        states = std::move(next);
    }
    long total = 0;
    for (const auto& [cap, cnt] : states) total += cnt;
    return total;
}

struct DegreeTables {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    std::array<Matrix, 5> to_p;     // to_p[b][i][j]: [p_j] b_i
    std::array<Matrix, 5> extract;  // coeff of b_i = sum_j f_j * extract[b][i][j]
};

std::size_t bidx(Basis b) { return static_cast<std::size_t>(b); }

std::unique_ptr<DegreeTables> build_tables(int n) {
    auto t = std::make_unique<DegreeTables>();
    t->parts = partitions_of(n);
    const std::size_t k = t->parts.size();
    for (std::size_t i = 0; i < k; ++i) t->index[t->parts[i]] = static_cast<int>(i);
    auto dense = [&](const RatExp& r) {
        std::vector<Rational> row(k, Rational(0));
        for (const auto& [lam, c] : r) row[t->index.at(lam)] = c;
        return row;
    };
    std::vector<RatExp> h_single(n + 1), e_single(n + 1);
    for (int j = 1; j <= n; ++j) {
        h_single[j] = single_part(j, false);
        e_single[j] = single_part(j, true);
    }
    std::vector<Rational> z(k), eps(k);
    for (std::size_t j = 0; j < k; ++j) {
        z[j] = Rational(z_lambda(t->parts[j]));
        eps[j] = sign_of(t->parts[j]);
    }
    for (auto& m : t->to_p) m.assign(k, std::vector<Rational>(k, Rational(0)));
    for (auto& m : t->extract) m.assign(k, std::vector<Rational>(k, Rational(0)));

    // p, h, e, s
    for (std::size_t i = 0; i < k; ++i) {
        const Partition& mu = t->parts[i];
        t->to_p[bidx(Basis::p)][i][i] = 1;
        RatExp hh{{Partition(), Rational(1)}}, ee{{Partition(), Rational(1)}};
        for (int part : mu.parts()) {
            hh = rat_mul(hh, h_single[part]);
            ee = rat_mul(ee, e_single[part]);
        }
        t->to_p[bidx(Basis::h)][i] = dense(hh);
        t->to_p[bidx(Basis::e)][i] = dense(ee);
        for (std::size_t j = 0; j < k; ++j)
            t->to_p[bidx(Basis::s)][i][j] = Rational(mn_character(mu, t->parts[j])) / z[j];
    }
    // m: invert the p -> m matrix.
    Matrix r(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) r[i][j] = p_to_m_count(t->parts[i], t->parts[j]);
    Matrix rinv = invert(r);
    t->to_p[bidx(Basis::m)] = rinv;  // m_i = sum_j rinv[i][j] p_j

    const auto& mrow = t->to_p[bidx(Basis::m)];
    const auto& hrow = t->to_p[bidx(Basis::h)];
    const auto& srow = t->to_p[bidx(Basis::s)];
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            t->extract[bidx(Basis::p)][i][j] = (i == j) ? Rational(1) : Rational(0);
            t->extract[bidx(Basis::m)][i][j] = z[j] * hrow[i][j];
            t->extract[bidx(Basis::h)][i][j] = z[j] * mrow[i][j];
            t->extract[bidx(Basis::e)][i][j] = z[j] * eps[j] * mrow[i][j];
            t->extract[bidx(Basis::s)][i][j] = z[j] * srow[i][j];
        }
    return t;
}

std::mutex tables_mutex;
std::unordered_map<int, std::unique_ptr<DegreeTables>> tables_cache;

const DegreeTables& tables(int n) {
    std::lock_guard lock(tables_mutex);
    auto it = tables_cache.find(n);
    if (it != tables_cache.end()) return *it->second;
    auto [ins, ok] = tables_cache.emplace(n, build_tables(n));
    return *ins->second;
}

}  // namespace

SymFun basis_element(Basis b, const Partition& lambda, int trunc) {
    if (lambda.size() > trunc)
        throw DegreeOverflow("degree " + std::to_string(lambda.size()) + " exceeds truncation " +
                             std::to_string(trunc));
    if (b == Basis::p) return SymFun::power_sum(lambda, 1, trunc);
    const auto& t = tables(lambda.size());
    const auto& row = t.to_p[bidx(b)][t.index.at(lambda)];
    SymFun f(trunc);
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) f.add_term(t.parts[j], QTRat(row[j]));
    return f;
}

SymFun e_n(int n, int trunc) {
    if (n < 0) return SymFun(trunc);
    return basis_element(Basis::e, n == 0 ? Partition() : Partition{n}, trunc);
}

SymFun h_n(int n, int trunc) {
    if (n < 0) return SymFun(trunc);
    return basis_element(Basis::h, n == 0 ? Partition() : Partition{n}, trunc);
}

SymFun p_n(int n, int trunc) {
    if (n < 0) return SymFun(trunc);
    return basis_element(Basis::p, n == 0 ? Partition() : Partition{n}, trunc);
}

Expansion basis_extract(const SymFun& f, Basis b) {
    Expansion out;
    if (b == Basis::p) return f.terms();
    for (int d = f.min_degree(); d >= 0 && d <= f.max_degree(); ++d) {
        SymFun comp = f.component(d);
        if (comp.is_zero()) continue;
        const auto& t = tables(d);
        const auto& w = t.extract[bidx(b)];
        std::vector<std::pair<std::size_t, const QTRat*>> present;
        for (const auto& [lam, c] : comp.terms()) present.emplace_back(t.index.at(lam), &c);
        for (std::size_t i = 0; i < t.parts.size(); ++i) {
            QTRat acc;
            for (const auto& [j, c] : present)
                if (w[i][j] != 0) acc += c->scaled(w[i][j]);
            if (!acc.is_zero()) out.emplace(t.parts[i], std::move(acc));
        }
    }
    return out;
}

SymFun basis_combine(Basis b, const Expansion& coeffs, int trunc) {
    SymFun f(trunc);
    for (const auto& [lam, c] : coeffs) {
        if (c.is_zero()) continue;
        if (b == Basis::p) {
            f.add_term(lam, c);
            continue;
        }
        if (lam.size() > trunc)
            throw DegreeOverflow("degree " + std::to_string(lam.size()) + " exceeds truncation " +
                                 std::to_string(trunc));
        const auto& t = tables(lam.size());
        const auto& row = t.to_p[bidx(b)][t.index.at(lam)];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) f.add_term(t.parts[j], c.scaled(row[j]));
    }
    return f;
}

SymFun omega(const SymFun& f) {
    SymFun r(f.trunc());
    for (const auto& [lam, c] : f.terms()) r.add_term(lam, sign_of(lam) > 0 ? c : -c);
    return r;
}

QTRat hall(const SymFun& f, const SymFun& g) {
    QTRat acc;
    for (const auto& [lam, c] : f.terms()) {
        auto it = g.terms().find(lam);
        if (it == g.terms().end()) continue;
        acc += (c * it->second).scaled(Rational(z_lambda(lam)));
    }
    return acc;
}

QTPoly star_weight(const Partition& mu) {
    QTPoly w(Rational(z_lambda(mu)) * sign_of(mu));
    for (int part : mu.parts()) w *= (QTPoly(1) - QTPoly::t(part)) * (QTPoly(1) - QTPoly::q(part));
    return w;
}

QTRat star(const SymFun& f, const SymFun& g) {
    QTRat acc;
    for (const auto& [lam, c] : f.terms()) {
        auto it = g.terms().find(lam);
        if (it == g.terms().end()) continue;
        acc += c * it->second * QTRat(star_weight(lam));
    }
    return acc;
}

SymFun petrie(int k, int n, int trunc) {
    if (k < 1 || n < 0) throw std::invalid_argument("petrie needs k >= 1 and n >= 0");
    Expansion coeffs;
    for (const auto& lam : partitions_of(n))
        if (lam.largest() < k) coeffs.emplace(lam, QTRat(1));
    return basis_combine(Basis::m, coeffs, trunc);
}

// ---------------------------------------------------------------------------
// Fundamental quasisymmetric functions

void FundVector::add(Subset s, const QTRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

FundVector& FundVector::operator+=(const FundVector& o) {
    if (coeffs.empty()) n = o.n;
    if (!o.coeffs.empty() && o.n != n) throw std::invalid_argument("adding fundamental vectors of different degree");
    for (const auto& [s, c] : o.coeffs) add(s, c);
    return *this;
}

FundVector FundVector::scaled(const QTRat& c) const {
    FundVector r;
    r.n = n;
    if (c.is_zero()) return r;
    for (const auto& [s, v] : coeffs) r.coeffs.emplace(s, v * c);
    return r;
}

namespace {

struct FundTables {
    std::vector<Partition> parts;
    std::vector<std::map<Subset, long>> rows;  // schur_to_fund per shape
    std::vector<Subset> pivots;                     // one subset per shape
    Matrix inverse;                                 // solves the pivot subsystem
};

std::unique_ptr<FundTables> build_fund(int n) {
    auto t = std::make_unique<FundTables>();
    t->parts = partitions_of(n);
    const std::size_t k = t->parts.size();
    for (const auto& lam : t->parts) t->rows.push_back(syt_descents(lam));
    // Greedy choice of independent subsets by elimination over Q.
    std::vector<std::vector<Rational>> basis;
    std::vector<std::size_t> lead;
    const Subset limit = n >= 1 ? (Subset{1} << (n - 1)) : 1;
    for (Subset s = 0; s < limit && t->pivots.size() < k; ++s) {
        std::vector<Rational> v(k);
        bool nonzero = false;
        for (std::size_t j = 0; j < k; ++j) {
            auto it = t->rows[j].find(s);
            v[j] = it == t->rows[j].end() ? 0 : it->second;
            if (v[j] != 0) nonzero = true;
        }
        if (!nonzero) continue;
        std::vector<Rational> red = v;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (red[lead[b]] == 0) continue;
            Rational f = red[lead[b]] / basis[b][lead[b]];
            for (std::size_t j = 0; j < k; ++j) red[j] -= f * basis[b][j];
        }
        std::size_t l = 0;
        while (l < k && red[l] == 0) ++l;
        if (l == k) continue;
        basis.push_back(red);
        lead.push_back(l);
        t->pivots.push_back(s);
    }
    if (t->pivots.size() != k) throw ArithmeticError("schur images are not independent");
    Matrix a(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            auto it = t->rows[j].find(t->pivots[i]);
            a[i][j] = it == t->rows[j].end() ? 0 : it->second;
        }
    t->inverse = invert(a);
    return t;
}

std::mutex fund_mutex;
std::unordered_map<int, std::unique_ptr<FundTables>> fund_cache;

const FundTables& fund_tables(int n) {
    std::lock_guard lock(fund_mutex);
    auto it = fund_cache.find(n);
    if (it != fund_cache.end()) return *it->second;
    auto [ins, ok] = fund_cache.emplace(n, build_fund(n));
    return *ins->second;
}

}  // namespace

FundVector schur_to_fund(const Partition& lambda) {
    FundVector v;
    v.n = lambda.size();
    for (const auto& [s, cnt] : syt_descents(lambda)) v.add(s, QTRat(cnt));
    return v;
}

FundVector to_fund(const SymFun& f, int n) {
    FundVector v;
    v.n = n;
    if (f.is_zero()) return v;
    if (f.min_degree() != n || f.max_degree() != n)
        throw std::invalid_argument("fundamental expansion needs a homogeneous function of degree " + std::to_string(n));
    if (n == 0) {
        v.add(0, f.coeff(Partition()));
        return v;
    }
    const auto& t = fund_tables(n);
    std::map<Partition, int> idx;
    for (std::size_t i = 0; i < t.parts.size(); ++i) idx[t.parts[i]] = static_cast<int>(i);
    for (const auto& [lam, c] : basis_extract(f, Basis::s))
        for (const auto& [s, cnt] : t.rows[idx.at(lam)]) v.add(s, c.scaled(Rational(cnt)));
    return v;
}

Expansion fund_solve(const FundVector& v) {
    const int n = v.n;
    for (const auto& [s, c] : v.coeffs)
        if (n < 0 || (n == 0 ? s != 0 : (s >> (n - 1)) != 0))
            throw std::invalid_argument("subset " + subset_to_string(s) + " is out of range for degree " +
                                        std::to_string(n));
    Expansion out;
    if (n == 0) {
        auto it = v.coeffs.find(0);
        if (it != v.coeffs.end()) out.emplace(Partition(), it->second);
        return out;
    }
    const auto& t = fund_tables(n);
    const std::size_t k = t.parts.size();
    std::vector<QTRat> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        auto it = v.coeffs.find(t.pivots[i]);
        if (it != v.coeffs.end()) rhs[i] = it->second;
    }
    std::vector<QTRat> sol(k);
    for (std::size_t j = 0; j < k; ++j) {
        QTRat acc;
        for (std::size_t i = 0; i < k; ++i)
            if (t.inverse[j][i] != 0 && !rhs[i].is_zero()) acc += rhs[i].scaled(t.inverse[j][i]);
        sol[j] = std::move(acc);
    }
    // Every subset must be reproduced, not only the pivots.
    FundVector back;
    back.n = n;
    for (std::size_t j = 0; j < k; ++j) {
        if (sol[j].is_zero()) continue;
        for (const auto& [s, cnt] : t.rows[j]) back.add(s, sol[j].scaled(Rational(cnt)));
    }
    if (!(back == v)) {
        Subset witness = 0;
        std::map<Subset, bool> seen;
        for (const auto& [s, c] : v.coeffs) seen[s] = true;
        for (const auto& [s, c] : back.coeffs) seen[s] = true;
        for (const auto& [s, flag] : seen) {
            auto a = v.coeffs.find(s);
            auto b = back.coeffs.find(s);
            QTRat va = a == v.coeffs.end() ? QTRat() : a->second;
            QTRat vb = b == back.coeffs.end() ? QTRat() : b->second;
            if (!(va == vb)) {
                witness = s;
                break;
            }
        }
        throw InconsistentSystem("quasisymmetric vector is not symmetric: mismatch at F_" + subset_to_string(witness),
                                 witness);
    }
    for (std::size_t j = 0; j < k; ++j)
        if (!sol[j].is_zero()) out.emplace(t.parts[j], std::move(sol[j]));
    return out;
}

}  // namespace qtsym
