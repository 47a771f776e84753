#pragma once

// Creation operators C_a, their Hall and *-adjoints, and related pairings.

#include <vector>

#include "qtsym/pleth.hpp"
#include "qtsym/symfun.hpp"

namespace qtsym {

/// (-1/q)^{a-1} f[X - (1-1/q)/z] Omega[zX] |_{z^a}
SymFun c_apply(int a, const SymFun& f);
/// C_{w_1} C_{w_2} ... C_{w_l}(1), applied right to left. The empty word gives 1.
SymFun c_word(const std::vector<int>& word, int trunc = kDefaultTrunc);

/// (-1/q)^{a-1} f[X + 1/z] Omega[(1-q)/q zX] |_{z^-a}
SymFun c_vee(int a, const SymFun& f);
/// The same operator through (-1/q)^{a-1} f[X + z] Omega[(1-q)X/(qz)] |_{z^a}.
SymFun c_vee_remark_form(int a, const SymFun& f);
/// (-1/q)^{a-1} f[X - eps M/z] Omega[-eps zX/(q(1-t))] |_{z^-a}
SymFun c_star(int a, const SymFun& f);

/// g[-eps X / M], the image that turns the Hall pairing into the *-pairing.
SymFun hall_to_star(const SymFun& g);

/// <C_a m_mu, h_lambda> through the H_i(z) / H(z) series product.
QTRat camh_pairing(int a, const Partition& mu, const Partition& lambda, int trunc = kDefaultTrunc);

/// Closed p-basis value of <C_a^vee p_lambda, p_mu>:
/// (-1/q)^{a-1} sum over alpha with p_alpha p_rho = p_mu of
/// binom(m(lambda), m(alpha)) binom(m(mu), m(alpha)) z_alpha p_rho[(1-q)/q].
QTRat cvee_power_pairing(int a, const Partition& lambda, const Partition& mu);

/// Coefficientwise specialization of one parameter.
SymFun specialize(const SymFun& f, Variable var, const Rational& value);

/// (-1/q)^e
QTRat minus_q_inverse_power(int e);

}  // namespace qtsym
