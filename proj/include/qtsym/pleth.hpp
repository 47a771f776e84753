#pragma once

// Plethystic substitution into alphabets built from X, z, q, t and epsilon.

#include <string>
#include <vector>

#include "qtsym/symfun.hpp"
#include "qtsym/zseries.hpp"

namespace qtsym {

/// One summand of an alphabet: coeff * z^z_power * (X or 1), optionally
/// carrying the epsilon marker.
///
/// p_k acts on the coefficient as the Adams operation q -> q^k, t -> t^k,
/// so numeric factors (letter counts and signs) are left alone while q and t
/// are raised to the k-th power. epsilon contributes (-1)^k.
struct Atom {
    QTRat coeff = 1;
    int z_power = 0;
    bool epsilon = false;
    bool has_x = true;
};

class Alphabet {
public:
    Alphabet() = default;
    /// The main alphabet X.
    static Alphabet x();
    static Alphabet atom(Atom a);
    /// coeff * z^z_power with no X.
    static Alphabet constant(const QTRat& coeff, int z_power = 0);

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }

    Alphabet operator-() const;
    Alphabet& operator+=(const Alphabet& o);
    friend Alphabet operator+(Alphabet a, const Alphabet& b) { return a += b; }
    friend Alphabet operator-(Alphabet a, const Alphabet& b) { return a += -b; }
    /// Multiplies every atom by c * z^dz.
    Alphabet times(const QTRat& c, int dz = 0) const;
    /// Multiplies every atom by epsilon.
    Alphabet times_epsilon() const;

    std::string to_string() const;

private:
    std::vector<Atom> atoms_;
};

/// f[A] as a finite Laurent polynomial in z with symmetric-function
/// coefficients. Exact: the window spans every exponent that can occur.
ZSeries<SymFun> plethysm(const SymFun& f, const Alphabet& a);

/// f[A] for a z-free alphabet.
SymFun plethysm_flat(const SymFun& f, const Alphabet& a);

/// f[g] for a symmetric function g (p_k[g] replaces every p_mu by p_{k mu}
/// and applies q -> q^k, t -> t^k to the coefficients).
SymFun compose(const SymFun& f, const SymFun& g);

/// Omega[A] = sum_n h_n[A] as a z-series. Each factor keeps z-exponents of
/// absolute value at most `window`; X-atoms are also cut at the degree
/// truncation. Atoms without X need a nonzero z-power.
ZSeries<SymFun> omega_series(const Alphabet& a, int trunc, int window);
ZSeries<SymFun> omega_series(const Alphabet& a, int trunc);

/// Monomial q^q t^t z^z.
struct ZMonomial {
    int q = 0;
    int t = 0;
    int z = 0;
};
/// h_n[(1-u)v] in closed form, as a Laurent polynomial in z.
ZSeries<QTRat> h_of_rank1(int n, const ZMonomial& u, const ZMonomial& v);

}  // namespace qtsym
