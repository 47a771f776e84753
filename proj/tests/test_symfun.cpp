#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "qtsym/symfun.hpp"

using namespace qtsym;

namespace {

// Oracle: explicit polynomials in N commuting variables with rational
// coefficients. With N >= n the degree-n part of the ring of symmetric
// functions embeds injectively, so equal polynomials mean equal functions.
using Exponents = std::vector<int>;
using Poly = std::map<Exponents, Rational>;

void add_to(Poly& p, const Exponents& e, const Rational& c) {
    Rational& slot = p[e];
    slot += c;
    if (slot == 0) p.erase(e);
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_to(r, e, ca * cb);
        }
    return r;
}

Poly one(int N) { return Poly{{Exponents(N, 0), Rational(1)}}; }

Poly power_sum_poly(int k, int N) {
    Poly r;
    for (int i = 0; i < N; ++i) {
        Exponents e(N, 0);
        e[i] = k;
        add_to(r, e, 1);
    }
    return r;
}

// Every exponent vector of total degree n.
void compositions_weak(int n, int N, const std::function<void(const Exponents&)>& visit) {
    Exponents e(N, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == N - 1) {
            e[i] = left;
            visit(e);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, n);
}

Poly monomial_poly(const Partition& lam, int N) {
    Poly r;
    Exponents want(lam.parts());
    want.resize(N, 0);
    std::sort(want.begin(), want.end());
    compositions_weak(lam.size(), N, [&](const Exponents& e) {
        Exponents s = e;
        std::sort(s.begin(), s.end());
        if (s == want) add_to(r, e, 1);
    });
    return r;
}

Poly h_poly(int n, int N) {
    Poly r;
    compositions_weak(n, N, [&](const Exponents& e) { add_to(r, e, 1); });
    return r;
}

Poly e_poly(int n, int N) {
    Poly r;
    compositions_weak(n, N, [&](const Exponents& e) {
        if (std::all_of(e.begin(), e.end(), [](int v) { return v <= 1; })) add_to(r, e, 1);
    });
    return r;
}

// Schur polynomial by enumerating semistandard tableaux with entries < N.
Poly schur_poly(const Partition& lam, int N) {
    Poly r;
    std::vector<std::vector<int>> tab(lam.length());
    for (int i = 0; i < lam.length(); ++i) tab[i].assign(lam[i], 0);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam[i]; ++j) cells.emplace_back(i, j);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            Exponents e(N, 0);
            for (const auto& row : tab)
                for (int v : row) ++e[v];
            add_to(r, e, 1);
            return;
        }
        auto [i, j] = cells[idx];
        int lo = 0;
        if (j > 0) lo = std::max(lo, tab[i][j - 1]);
        if (i > 0) lo = std::max(lo, tab[i - 1][j] + 1);
        for (int v = lo; v < N; ++v) {
            tab[i][j] = v;
            rec(idx + 1);
        }
    };
    rec(0);
    return r;
}

Poly product_of(const Partition& lam, int N, const std::function<Poly(int, int)>& single) {
    Poly r = one(N);
    for (int part : lam.parts()) r = mul(r, single(part, N));
    return r;
}

Poly oracle(Basis b, const Partition& lam, int N) {
    switch (b) {
        case Basis::m: return monomial_poly(lam, N);
        case Basis::e: return product_of(lam, N, e_poly);
        case Basis::h: return product_of(lam, N, h_poly);
        case Basis::p: return product_of(lam, N, power_sum_poly);
        case Basis::s: return schur_poly(lam, N);
    }
    return {};
}

// Evaluates a rational-coefficient SymFun in N variables.
Poly to_poly(const SymFun& f, int N) {
    Poly r;
    for (const auto& [lam, c] : f.terms()) {
        auto v = c.constant_value();
        REQUIRE(v);
        for (const auto& [e, x] : product_of(lam, N, power_sum_poly)) add_to(r, e, x * *v);
    }
    return r;
}

SymFun B(Basis b, const Partition& lam, int trunc = kDefaultTrunc) { return basis_element(b, lam, trunc); }

const Basis kAll[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};

}  // namespace

TEST_CASE("basis elements agree with explicit polynomials") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n))
            for (Basis b : kAll) {
                INFO(basis_name(b) << lam.to_string());
                CHECK(to_poly(B(b, lam), n) == oracle(b, lam, n));
            }
}

TEST_CASE("basis names") {
    CHECK(parse_basis("schur") == Basis::s);
    CHECK(parse_basis("m") == Basis::m);
    CHECK(parse_basis("elementary") == Basis::e);
    CHECK(basis_name(Basis::h) == "h");
    CHECK_THROWS_AS(parse_basis("x"), std::invalid_argument);
}

TEST_CASE("small conversions") {
    CHECK(B(Basis::e, {1}) == B(Basis::h, {1}));
    CHECK(B(Basis::s, {1}) == B(Basis::m, {1}));
    CHECK(B(Basis::m, {2}) == p_n(2));
    CHECK(h_n(2) == (p_n(1) * p_n(1) + p_n(2)).scaled(Rational(1, 2)));
    CHECK(basis_extract(e_n(2), Basis::m) == Expansion{{Partition{1, 1}, QTRat(1)}});
    CHECK(basis_extract(p_n(2), Basis::s) == Expansion{{Partition{2}, QTRat(1)}, {Partition{1, 1}, QTRat(-1)}});
    CHECK(basis_extract(h_n(2), Basis::e) == Expansion{{Partition{2}, QTRat(-1)}, {Partition{1, 1}, QTRat(1)}});
    CHECK(e_n(1) * e_n(1) - e_n(2).scaled(2) == p_n(2));
    CHECK(basis_extract(B(Basis::m, {2}) * h_n(1), Basis::m) ==
          Expansion{{Partition{3}, QTRat(1)}, {Partition{2, 1}, QTRat(1)}});
    CHECK(e_n(0).is_one());
    CHECK(h_n(-1).is_zero());
}

TEST_CASE("basis round trips") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : partitions_of(n))
            for (Basis b : kAll) CHECK(basis_extract(B(b, lam), b) == Expansion{{lam, QTRat(1)}});
    Expansion mixed{{Partition{2, 1}, QTRat(QTPoly::q())}, {Partition{3}, QTRat(-2)}, {Partition{1}, QTRat(Rational(1, 3))}};
    for (Basis b : kAll) CHECK(basis_extract(basis_combine(b, mixed), b) == mixed);
}

TEST_CASE("omega") {
    CHECK(omega(p_n(2)) == -p_n(2));
    CHECK(omega(e_n(3)) == h_n(3));
    CHECK(omega(B(Basis::s, {2, 1})) == B(Basis::s, {2, 1}));
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            CHECK(omega(B(Basis::s, lam)) == B(Basis::s, lam.conjugate()));
            CHECK(omega(B(Basis::e, lam)) == B(Basis::h, lam));
            CHECK(omega(omega(B(Basis::m, lam))) == B(Basis::m, lam));
        }
}

TEST_CASE("Hall scalar product") {
    CHECK(hall(p_n(2), p_n(2)) == QTRat(2));
    CHECK(hall(B(Basis::h, {2, 1}), B(Basis::m, {2, 1})) == QTRat(1));
    CHECK(hall(B(Basis::s, {2, 1}), B(Basis::s, {3})).is_zero());
    for (int n = 1; n <= 6; ++n) {
        auto ps = partitions_of(n);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                QTRat delta(a == b ? 1 : 0);
                CHECK(hall(B(Basis::h, a), B(Basis::m, b)) == delta);
                CHECK(hall(B(Basis::s, a), B(Basis::s, b)) == delta);
                CHECK(hall(omega(B(Basis::e, a)), omega(B(Basis::m, b))) == hall(B(Basis::e, a), B(Basis::m, b)));
            }
    }
    // Cauchy: <f,g> = sum_lambda <f,m_lambda><h_lambda,g>
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto ps = partitions_of(n);
        SymFun f, g;
        for (int i = 0; i < 3; ++i) {
            f += B(kAll[rng() % 5], ps[rng() % ps.size()]).scaled(QTRat(QTPoly::q(rng() % 3)));
            g += B(kAll[rng() % 5], ps[rng() % ps.size()]).scaled(QTRat(static_cast<long>(rng() % 5) - 2));
        }
        QTRat sum;
        for (const auto& lam : ps) sum += hall(f, B(Basis::m, lam)) * hall(B(Basis::h, lam), g);
        CHECK(sum == hall(f, g));
    }
}

TEST_CASE("star scalar product") {
    QTPoly one_q = QTPoly(1) - QTPoly::q(), one_t = QTPoly(1) - QTPoly::t();
    CHECK(star(p_n(1), p_n(1)) == QTRat(one_t * one_q));
    CHECK(star(p_n(2), p_n(2)) == QTRat((QTPoly(1) - QTPoly::t(2)) * (QTPoly(1) - QTPoly::q(2)) * QTPoly(-2)));
    CHECK(star(p_n(2), B(Basis::p, {1, 1})).is_zero());
    CHECK(star_weight(Partition{}) == QTPoly(1));
}

TEST_CASE("fundamental quasisymmetric expansions") {
    CHECK(schur_to_fund(Partition{3}).coeffs == std::map<Subset, QTRat>{{0, QTRat(1)}});
    CHECK(schur_to_fund(Partition{1, 1}).coeffs == std::map<Subset, QTRat>{{subset_from({1}), QTRat(1)}});
    FundVector v{2, {}};
    v.add(0, 1);
    v.add(subset_from({1}), 1);
    CHECK(fund_solve(v) == Expansion{{Partition{2}, QTRat(1)}, {Partition{1, 1}, QTRat(1)}});
    // F_{1} alone at n = 3 is not symmetric
    FundVector bad{3, {}};
    bad.add(subset_from({1}), 1);
    CHECK_THROWS_AS(fund_solve(bad), InconsistentSystem);
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            SymFun s = B(Basis::s, lam).scaled(QTRat(QTPoly::q() + QTPoly::t()));
            CHECK(fund_solve(to_fund(s, n)) == basis_extract(s, Basis::s));
        }
}

TEST_CASE("petrie functions") {
    for (int n = 0; n <= 6; ++n) CHECK(petrie(2, n) == e_n(n));
    CHECK(petrie(3, 2) == B(Basis::m, {2}) + B(Basis::m, {1, 1}));
    for (int n = 1; n <= 6; ++n) {
        SymFun all;
        for (const auto& lam : partitions_of(n)) all += B(Basis::m, lam);
        CHECK(petrie(n + 1, n) == all);
    }
    CHECK_THROWS_AS(petrie(0, 2), std::invalid_argument);
}

TEST_CASE("petrie functions by alternating sums") {
    for (int k = 2; k <= 5; ++k)
        for (int n = 0; n <= 10; ++n) {
            SymFun rhs(10);
            for (int i = 0; k * i <= n; ++i) {
                SymFun term = B(Basis::m, Partition::rectangle(k, i), 10) * h_n(n - k * i, 10);
                rhs += i % 2 ? -term : term;
            }
            CHECK(petrie(k, n, 10) == rhs);
        }
    for (int k = 0; k <= 5; ++k) {
        SymFun rhs(10);
        for (int i = 0; i <= k; ++i) {
            SymFun term = B(Basis::m, Partition::rectangle(2, i), 10) * h_n(2 * k - 2 * i, 10);
            rhs += i % 2 ? -term : term;
        }
        CHECK(e_n(2 * k, 10) == rhs);
    }
}

TEST_CASE("degree truncation is loud") {
    CHECK_THROWS_AS(B(Basis::e, {5}, 4), DegreeOverflow);
    CHECK_THROWS_AS(h_n(3, 4) * h_n(2, 4), DegreeOverflow);
    CHECK_THROWS_AS(h_n(3, 4).with_trunc(2), DegreeOverflow);
    CHECK(h_n(2, 4) * h_n(2, 4) == B(Basis::h, {2, 2}, 4));
}
