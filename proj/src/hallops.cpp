#include "qtsym/hallops.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace qtsym {

QTRat minus_q_inverse_power(int e) {
    return QTRat(QTPoly::monomial(e % 2 == 0 ? 1 : -1, -e, 0));
}

namespace {

QTRat q_inv() { return QTRat(QTPoly::q(-1)); }

// (1-q)/q
QTRat one_minus_q_over_q() { return QTRat(QTPoly::q(-1) - QTPoly(1)); }

// Omega[c zX] is used by every operator application; keep one per
// (trunc, multiplier) key.
const ZSeries<SymFun>& omega_zx(int trunc, int which) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<ZSeries<SymFun>>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(trunc, which);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    Atom atom;
    atom.z_power = 1;
    if (which == 1) atom.coeff = one_minus_q_over_q();
    auto s = std::make_unique<ZSeries<SymFun>>(omega_series(Alphabet::atom(atom), trunc));
    return *cache.emplace(key, std::move(s)).first->second;
}

}  // namespace

SymFun c_apply(int a, const SymFun& f) {
    const int trunc = f.trunc();
    if (f.is_zero()) return SymFun(trunc);
    if (f.max_degree() + a > trunc)
        throw DegreeOverflow("C_" + std::to_string(a) + " raises degree " + std::to_string(f.max_degree()) +
                             " beyond truncation " + std::to_string(trunc));
    // X - (1 - 1/q)/z
    Alphabet alpha = Alphabet::x() - Alphabet::constant(QTRat(QTPoly(1) - QTPoly::q(-1)), -1);
    auto shifted = plethysm(f, alpha);
    SymFun r = shifted.product_coefficient(omega_zx(trunc, 0), a);
    return r.scaled(minus_q_inverse_power(a - 1));
}

SymFun c_word(const std::vector<int>& word, int trunc) {
    SymFun f = SymFun::constant(1, trunc);
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = c_apply(*it, f);
    return f;
}

SymFun c_vee(int a, const SymFun& f) {
    const int trunc = f.trunc();
    if (f.is_zero()) return SymFun(trunc);
    Alphabet alpha = Alphabet::x() + Alphabet::constant(1, -1);
    auto shifted = plethysm(f, alpha);
    SymFun r = shifted.product_coefficient(omega_zx(trunc, 1), -a);
    return r.scaled(minus_q_inverse_power(a - 1));
}

SymFun c_vee_remark_form(int a, const SymFun& f) {
    const int trunc = f.trunc();
    if (f.is_zero()) return SymFun(trunc);
    Alphabet alpha = Alphabet::x() + Alphabet::constant(1, 1);
    auto shifted = plethysm(f, alpha);
    Atom atom;
    atom.coeff = one_minus_q_over_q();
    atom.z_power = -1;
    auto om = omega_series(Alphabet::atom(atom), trunc);
    SymFun r = shifted.product_coefficient(om, a);
    return r.scaled(minus_q_inverse_power(a - 1));
}

SymFun c_star(int a, const SymFun& f) {
    const int trunc = f.trunc();
    if (f.is_zero()) return SymFun(trunc);
    const QTPoly m_const = (QTPoly(1) - QTPoly::q()) * (QTPoly(1) - QTPoly::t());
    // X - eps M / z
    Atom shift;
    shift.coeff = QTRat(-m_const);
    shift.z_power = -1;
    shift.epsilon = true;
    shift.has_x = false;
    auto shifted = plethysm(f, Alphabet::x() + Alphabet::atom(shift));
    // -eps z X / (q (1 - t))
    Atom om;
    om.coeff = QTRat::fraction(QTPoly(-1), QTPoly::q() * (QTPoly(1) - QTPoly::t()));
    om.z_power = 1;
    om.epsilon = true;
    auto omega = omega_series(Alphabet::atom(om), trunc);
    SymFun r = shifted.product_coefficient(omega, -a);
    return r.scaled(minus_q_inverse_power(a - 1));
}

SymFun hall_to_star(const SymFun& g) {
    const QTPoly m_const = (QTPoly(1) - QTPoly::q()) * (QTPoly(1) - QTPoly::t());
    Atom atom;
    atom.coeff = QTRat::fraction(QTPoly(-1), m_const);
    atom.epsilon = true;
    return plethysm_flat(g, Alphabet::atom(atom));
}

QTRat camh_pairing(int a, const Partition& mu, const Partition& lambda, int trunc) {
    if (lambda.size() != mu.size() + a)
        throw std::invalid_argument("camh pairing needs |lambda| = |mu| + a");
    if (lambda.size() > trunc) throw DegreeOverflow("pairing degree exceeds truncation");
    const SymFun zero(trunc);
    // prod_i H_i(z)^{m_i}
    auto product = ZSeries<SymFun>::monomial(zero, SymFun::constant(1, trunc), 0);
    for (int part : lambda.parts()) {
        ZSeries<SymFun> hi(zero, 0, part);
        for (int j = 0; j <= part; ++j) hi.add(j, h_n(j, trunc));
        product = product * hi;
    }
    // Omega[zX/q] / H(z)
    Atom scaled_z;
    scaled_z.coeff = q_inv();
    scaled_z.z_power = 1;
    auto tail = omega_series(Alphabet::atom(scaled_z), trunc) * omega_zx(trunc, 0).inverse_unit();
    SymFun rhs = product.product_coefficient(tail, lambda.size() - a).scaled(minus_q_inverse_power(a - 1));
    return hall(basis_element(Basis::m, mu, trunc), rhs);
}

QTRat cvee_power_pairing(int a, const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size() + a) return QTRat();
    auto ml = lambda.multiplicities();
    auto mm = mu.multiplicities();
    // Enumerate alpha by its multiplicity vector, bounded by both lambda and mu.
    const int top = mu.largest();
    std::vector<int> malpha(top + 1, 0);
    QTRat total;
    const QTRat base = one_minus_q_over_q();
    std::function<void(int)> rec = [&](int i) {
        if (i > top) {
            std::vector<int> apart, rpart;
            Integer coef = 1;
            for (int j = 1; j <= top; ++j) {
                int in_l = j < static_cast<int>(ml.size()) ? ml[j] : 0;
                coef *= binomial(in_l, malpha[j]) * binomial(mm[j], malpha[j]);
                for (int c = 0; c < malpha[j]; ++c) apart.push_back(j);
                for (int c = 0; c < mm[j] - malpha[j]; ++c) rpart.push_back(j);
            }
            if (coef == 0) return;
            Partition alpha = Partition::from_parts(apart), rho = Partition::from_parts(rpart);
            QTRat term(Rational(coef * z_lambda(alpha)));
            for (int part : rho.parts()) term *= base.substitute_power(part);
            total += term;
            return;
        }
        for (int c = 0; c <= mm[i]; ++c) {
            malpha[i] = c;
            rec(i + 1);
        }
        malpha[i] = 0;
    };
    rec(1);
    return total * minus_q_inverse_power(a - 1);
}

SymFun specialize(const SymFun& f, Variable var, const Rational& value) {
    SymFun r(f.trunc());
    for (const auto& [lam, c] : f.terms()) r.add_term(lam, specialize(c, var, value));
    return r;
}

}  // namespace qtsym
