#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qtsym/hallops.hpp"

using namespace qtsym;

namespace {

QTRat qr(const QTPoly& p) { return QTRat(p); }
SymFun B(Basis b, const Partition& lam, int trunc = kDefaultTrunc) { return basis_element(b, lam, trunc); }
SymFun one() { return SymFun::constant(1); }

// h_lambda at q = 1 with the sign (-1)^{|alpha| - l(alpha)}.
SymFun signed_h(const Composition& alpha) {
    SymFun r = one();
    for (int part : alpha.parts()) r *= h_n(part);
    return (alpha.size() - alpha.length()) % 2 ? -r : r;
}

}  // namespace

TEST_CASE("creation operators on 1") {
    CHECK(c_apply(1, one()) == h_n(1));
    CHECK(c_apply(2, one()) == h_n(2).scaled(qr(-QTPoly::q(-1))));
    SymFun c11 = c_apply(1, c_apply(1, one()));
    CHECK(c11 == h_n(1) * h_n(1) - h_n(2).scaled(qr(QTPoly(1) - QTPoly::q(-1))));
    CHECK(c_apply(2, one()) + c11 == e_n(2));
    CHECK(c_word({3, 2}) == c_apply(3, c_apply(2, one())));
    CHECK(c_word({3, 2}).max_degree() == 5);
    CHECK(c_word({}).is_one());
    // C_0 is not the identity: (-1/q)^{-1} Omega[zX] at z^0
    CHECK(c_apply(0, one()) == SymFun::constant(qr(-QTPoly::q())));
    CHECK(c_apply(-1, one()).is_zero());
    CHECK_THROWS_AS(c_apply(3, h_n(6)), DegreeOverflow);
}

TEST_CASE("sum of all compositions gives e_n") {
    for (int n = 1; n <= 5; ++n) {
        SymFun sum;
        for (const auto& alpha : compositions_of(n)) sum += c_word(alpha.parts());
        CHECK(sum == e_n(n));
    }
}

TEST_CASE("specialization at q = 1") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& alpha : compositions_of(n))
            CHECK(specialize(c_word(alpha.parts()), Variable::q, 1) == signed_h(alpha));
    CHECK(minus_q_inverse_power(0) == QTRat(1));
    CHECK(minus_q_inverse_power(1) == qr(-QTPoly::q(-1)));
    CHECK(minus_q_inverse_power(2) == qr(QTPoly::q(-2)));
    CHECK(minus_q_inverse_power(-1) == qr(-QTPoly::q()));
}

TEST_CASE("Hall adjoint") {
    CHECK(c_vee(1, h_n(1)).is_one());
    CHECK(hall(h_n(1), c_apply(1, one())) == QTRat(1));
    for (int a = 1; a <= 3; ++a)
        for (int d = 0; d + a <= 5; ++d)
            for (const auto& mu : partitions_of(d))
                for (const auto& lam : partitions_of(d + a)) {
                    SymFun f = B(Basis::p, lam), g = B(Basis::s, mu);
                    CHECK(hall(f, c_apply(a, g)) == hall(c_vee(a, f), g));
                }
    for (int a = 1; a <= 3; ++a)
        for (const auto& lam : partitions_of(4)) CHECK(c_vee(a, B(Basis::h, lam)) == c_vee_remark_form(a, B(Basis::h, lam)));
    CHECK(c_vee(2, h_n(1)).is_zero());
}

TEST_CASE("closed p-basis pairing") {
    for (int a = 1; a <= 3; ++a)
        for (int d = 0; d + a <= 5; ++d)
            for (const auto& mu : partitions_of(d))
                for (const auto& lam : partitions_of(d + a))
                    CHECK(cvee_power_pairing(a, lam, mu) == hall(c_vee(a, B(Basis::p, lam)), B(Basis::p, mu)));
}

TEST_CASE("star adjoint and the Hall-to-star bridge") {
    // <f, C_a g>_* = <C*_a f, g>_*
    CHECK(star(h_n(3), c_apply(3, one())) == star(c_star(3, h_n(3)), one()));
    for (int a = 1; a <= 3; ++a)
        for (int d = 0; d + a <= 4; ++d)
            for (const auto& mu : partitions_of(d))
                for (const auto& lam : partitions_of(d + a)) {
                    SymFun f = B(Basis::m, lam), g = B(Basis::e, mu);
                    CHECK(star(f, c_apply(a, g)) == star(c_star(a, f), g));
                }
    // <f, g> = <f, g[-eps X / M]>_*
    for (int n = 0; n <= 4; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                CHECK(hall(B(Basis::s, lam), B(Basis::h, mu)) == star(B(Basis::s, lam), hall_to_star(B(Basis::h, mu))));
}

TEST_CASE("camh pairing") {
    CHECK(camh_pairing(2, Partition{}, Partition{2}) == qr(-QTPoly::q(-1)));
    CHECK(camh_pairing(1, Partition{1}, Partition{1, 1}) == hall(c_apply(1, B(Basis::m, {1})), B(Basis::h, {1, 1})));
    CHECK(camh_pairing(2, Partition{1}, Partition{2, 1}) == hall(c_apply(2, B(Basis::m, {1})), B(Basis::h, {2, 1})));
    for (int a = 1; a <= 3; ++a)
        for (int d = 0; d + a <= 5; ++d)
            for (const auto& mu : partitions_of(d))
                for (const auto& lam : partitions_of(d + a))
                    CHECK(camh_pairing(a, mu, lam) == hall(c_apply(a, B(Basis::m, mu)), B(Basis::h, lam)));
}
