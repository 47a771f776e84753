#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qtsym/pleth.hpp"

using namespace qtsym;

namespace {

QTRat qr(const QTPoly& p) { return QTRat(p); }
SymFun B(Basis b, const Partition& lam, int trunc = kDefaultTrunc) { return basis_element(b, lam, trunc); }
const Basis kAll[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};

// z as a single extra letter.
Alphabet letter_z() { return Alphabet::constant(1, 1); }

SymFun scalar(const QTRat& c, int trunc = kDefaultTrunc) { return SymFun::constant(c, trunc); }

}  // namespace

TEST_CASE("z-series window") {
    ZSeries<QTRat> s(QTRat(), 0, 2);
    s.add(0, 1);
    s.add(2, 3);
    CHECK(s.extract(2) == QTRat(3));
    CHECK(s.extract(1).is_zero());
    CHECK_THROWS_AS(s.extract(3), WindowError);
    // (1/z)(1 + z)
    ZSeries<QTRat> a = ZSeries<QTRat>::monomial(QTRat(), 1, -1);
    ZSeries<QTRat> b(QTRat(), 0, 1);
    b.add(0, 1);
    b.add(1, 1);
    CHECK((a * b).extract(-1) == QTRat(1));
    CHECK((a * b).extract(0) == QTRat(1));
    auto om = omega_series(Alphabet::x().times(1, 1), 4);
    CHECK(om.extract(2) == h_n(2));
    CHECK_THROWS_AS(om.extract(5), WindowError);
    CHECK_THROWS_AS(om.coefficient(5), WindowError);
}

TEST_CASE("power sums of constant atoms") {
    // p_2[X - (1 - 1/q)/z] = p_2 - (1 - q^-2)/z^2
    Alphabet a = Alphabet::x() - Alphabet::constant(qr(QTPoly(1) - QTPoly::q(-1)), -1);
    auto r = plethysm(p_n(2), a);
    CHECK(r.coefficient(0) == p_n(2));
    CHECK(r.coefficient(-2) == scalar(qr(QTPoly::q(-2) - QTPoly(1))));
    CHECK(r.coefficient(-1).is_zero());
    CHECK(r.coefficient(1).is_zero());
}

TEST_CASE("identity alphabet") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (Basis b : kAll) CHECK(plethysm_flat(B(b, lam), Alphabet::x()) == B(b, lam));
}

TEST_CASE("negative epsilon X gives omega") {
    Alphabet neg_eps = Alphabet::atom(Atom{-1, 0, true, true});
    CHECK(plethysm_flat(B(Basis::s, {2, 1}), neg_eps) == omega(B(Basis::s, {2, 1})));
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (Basis b : kAll) CHECK(plethysm_flat(B(b, lam), neg_eps) == omega(B(b, lam)));
    // -X alone is omega up to the sign (-1)^n
    for (const auto& lam : partitions_of(4))
        CHECK(plethysm_flat(B(Basis::s, lam), -Alphabet::x()) == omega(B(Basis::s, lam)));
}

TEST_CASE("addition formulas with a second letter") {
    for (int n = 0; n <= 6; ++n) {
        auto h = plethysm(h_n(n), Alphabet::x() + letter_z());
        auto e = plethysm(e_n(n), Alphabet::x() + letter_z());
        for (int j = 0; j <= n; ++j) {
            CHECK(h.coefficient(j) == h_n(n - j));
            CHECK(e.coefficient(j) == (j <= 1 ? e_n(n - j) : SymFun()));
        }
    }
    // Y = z + z^2 as two letters: h_n[X + Y] = sum_i h_i[X] h_{n-i}[Y]
    Alphabet y = letter_z() + Alphabet::constant(1, 2);
    for (int n = 0; n <= 5; ++n) {
        auto lhs = plethysm(h_n(n), Alphabet::x() + y);
        for (int z = 0; z <= 2 * n; ++z) {
            SymFun rhs;
            for (int i = 0; i <= n; ++i) {
                // h_m[z + z^2] at z^k counts pairs a + b = m, a + 2b = k
                int m = n - i;
                int b = z - m;
                if (b >= 0 && b <= m) rhs += h_n(i);
            }
            CHECK(lhs.coefficient(z) == rhs);
        }
    }
}

TEST_CASE("omega series") {
    const int trunc = 5;
    auto om = omega_series(Alphabet::x().times(1, 1), trunc);
    for (int n = 0; n <= trunc; ++n) CHECK(om.extract(n) == h_n(n, trunc));
    auto inv = omega_series(-Alphabet::x().times(1, 1), trunc);
    for (int n = 0; n <= trunc; ++n) CHECK(inv.extract(n) == e_n(n, trunc).scaled(n % 2 ? -1 : 1));
    auto prod = om * inv;
    CHECK(prod.extract(0).is_one());
    for (int n = 1; n <= trunc; ++n) CHECK(prod.extract(n).is_zero());
    // Omega[(1-q) z X / q] at z^1 is (1/q - 1) p_1
    QTRat c = qr(QTPoly::q(-1) - QTPoly(1));
    auto mixed = omega_series(Alphabet::x().times(c, 1), trunc);
    CHECK(mixed.extract(1) == p_n(1, trunc).scaled(c));
    // and it factors as Omega[zX/q] Omega[-zX]
    auto factored = omega_series(Alphabet::x().times(qr(QTPoly::q(-1)), 1), trunc) * inv;
    for (int n = 0; n <= trunc; ++n) CHECK(mixed.extract(n) == factored.extract(n));
    // Omega[A + B] = Omega[A] Omega[B] with a constant atom
    Alphabet a = Alphabet::x().times(1, 1), b = Alphabet::constant(qr(QTPoly::t()), 1);
    auto sum = omega_series(a + b, trunc);
    auto split = omega_series(a, trunc) * omega_series(b, trunc);
    for (int n = 0; n <= trunc; ++n) CHECK(sum.extract(n) == split.extract(n));
    CHECK_THROWS_AS(omega_series(Alphabet::constant(2), trunc), std::invalid_argument);
}

TEST_CASE("rank one closed form") {
    CHECK(h_of_rank1(0, {1, 0, 0}, {0, 1, 0}).extract(0).is_one());
    // h_2[(1-q)t] = (1-q) t^2
    auto r = h_of_rank1(2, {1, 0, 0}, {0, 1, 0});
    CHECK(r.extract(0) == qr((QTPoly(1) - QTPoly::q()) * QTPoly::t(2)));
    // u = q^2, v = 1/z^3, n = 3 gives (1 - q^2) z^-9
    auto s = h_of_rank1(3, {2, 0, 0}, {0, 0, -3});
    CHECK(s.extract(-9) == qr(QTPoly(1) - QTPoly::q(2)));
    // against plethysm on the alphabet v - uv
    const ZMonomial us[] = {{1, 0, 0}, {0, 1, 1}, {2, -1, -1}, {0, 0, 2}};
    const ZMonomial vs[] = {{0, 1, 0}, {1, 0, -1}, {0, 0, 1}, {-1, 2, 0}};
    for (const auto& u : us)
        for (const auto& v : vs) {
            QTRat vm(QTPoly::monomial(1, v.q, v.t));
            QTRat um(QTPoly::monomial(1, u.q, u.t));
            Alphabet alpha = Alphabet::constant(vm, v.z) - Alphabet::constant(vm * um, v.z + u.z);
            for (int n = 0; n <= 4; ++n) {
                auto closed = h_of_rank1(n, u, v);
                auto pl = plethysm(h_n(n), alpha);
                for (int z = std::min(closed.lo(), pl.lo()); z <= std::max(closed.hi(), pl.hi()); ++z)
                    CHECK(scalar(closed.coefficient(z)) == pl.coefficient(z));
            }
        }
}

TEST_CASE("composition with a plain symmetric function") {
    for (int j = 0; j <= 4; ++j) {
        SymFun m = B(Basis::m, Partition::rectangle(2, j));
        CHECK(compose(e_n(j), p_n(2)) == m);
        CHECK(compose(p_n(2), e_n(j)) == m);
    }
    // p_2[q p_1] = q^2 p_2
    CHECK(compose(p_n(2), p_n(1).scaled(qr(QTPoly::q()))) == p_n(2).scaled(qr(QTPoly::q(2))));
}

TEST_CASE("alphabet arithmetic") {
    Alphabet a = Alphabet::x().times(qr(QTPoly::q()), 2);
    REQUIRE(a.atoms().size() == 1);
    CHECK(a.atoms()[0].z_power == 2);
    CHECK(a.atoms()[0].coeff == qr(QTPoly::q()));
    Alphabet e = a.times_epsilon();
    CHECK(e.atoms()[0].epsilon);
    CHECK_FALSE(e.times_epsilon().atoms()[0].epsilon);
    // p_3[eps X] = -p_3
    CHECK(plethysm_flat(p_n(3), Alphabet::x().times_epsilon()) == -p_n(3));
    CHECK_THROWS_AS(plethysm_flat(p_n(1), letter_z()), std::invalid_argument);
    CHECK_THROWS_AS(plethysm_flat(h_n(3, 3) * h_n(0, 3), Alphabet::x()).with_trunc(2), DegreeOverflow);
}
