#include "qtsym/pleth.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>

namespace qtsym {

Alphabet Alphabet::x() { return atom(Atom{}); }

Alphabet Alphabet::atom(Atom a) {
    Alphabet r;
    if (!a.coeff.is_zero()) r.atoms_.push_back(std::move(a));
    return r;
}

Alphabet Alphabet::constant(const QTRat& coeff, int z_power) {
    Atom a;
    a.coeff = coeff;
    a.z_power = z_power;
    a.has_x = false;
    return atom(std::move(a));
}

Alphabet Alphabet::operator-() const {
    Alphabet r = *this;
    for (auto& a : r.atoms_) a.coeff = -a.coeff;
    return r;
}

Alphabet& Alphabet::operator+=(const Alphabet& o) {
    atoms_.insert(atoms_.end(), o.atoms_.begin(), o.atoms_.end());
    return *this;
}

Alphabet Alphabet::times(const QTRat& c, int dz) const {
    Alphabet r;
    if (c.is_zero()) return r;
    r.atoms_ = atoms_;
    for (auto& a : r.atoms_) {
        a.coeff *= c;
        a.z_power += dz;
    }
    return r;
}

Alphabet Alphabet::times_epsilon() const {
    Alphabet r = *this;
    for (auto& a : r.atoms_) a.epsilon = !a.epsilon;
    return r;
}

std::string Alphabet::to_string() const {
    if (atoms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const auto& a = atoms_[i];
        if (i) out += " + ";
        out += "(" + a.coeff.to_string() + ")";
        if (a.epsilon) out += "*eps";
        if (a.z_power != 0) out += "*z^" + std::to_string(a.z_power);
        if (a.has_x) out += "*X";
    }
    return out;
}

namespace {

struct Image {
    int z;
    QTRat c;
    bool x;
};

// p_k[A], with atoms of equal shape merged.
std::vector<Image> power_image(const Alphabet& a, int k) {
    std::vector<Image> out;
    for (const auto& atom : a.atoms()) {
        QTRat c = atom.coeff.substitute_power(k);
        if (atom.epsilon && k % 2 == 1) c = -c;
        int z = atom.z_power * k;
        auto it = std::find_if(out.begin(), out.end(), [&](const Image& im) { return im.z == z && im.x == atom.has_x; });
        if (it == out.end())
            out.push_back({z, std::move(c), atom.has_x});
        else
            it->c += c;
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Image& im) { return im.c.is_zero(); }), out.end());
    return out;
}

}  // namespace

ZSeries<SymFun> plethysm(const SymFun& f, const Alphabet& a) {
    const int trunc = f.trunc();
    std::map<int, std::vector<Image>> images;
    std::map<int, SymFun> acc;
    int lo = INT_MAX, hi = INT_MIN;
    for (const auto& [lam, c] : f.terms()) {
        std::map<std::pair<int, Partition>, QTRat> state;
        state.emplace(std::make_pair(0, Partition()), c);
        int slo = 0, shi = 0;
        for (int k : lam.parts()) {
            auto it = images.find(k);
            if (it == images.end()) it = images.emplace(k, power_image(a, k)).first;
            const auto& img = it->second;
            if (img.empty()) {
                state.clear();
                break;
            }
            int mn = INT_MAX, mx = INT_MIN;
            for (const auto& im : img) {
                mn = std::min(mn, im.z);
                mx = std::max(mx, im.z);
            }
            slo += mn;
            shi += mx;
            std::map<std::pair<int, Partition>, QTRat> next;
            for (const auto& [key, v] : state)
                for (const auto& im : img) {
                    std::pair<int, Partition> nk{key.first + im.z, im.x ? key.second.merged(Partition{k}) : key.second};
                    QTRat nv = v * im.c;
                    auto [pos, inserted] = next.try_emplace(std::move(nk), nv);
                    if (!inserted) pos->second += nv;
                }
            state = std::move(next);
        }
        if (state.empty()) continue;
        lo = std::min(lo, slo);
        hi = std::max(hi, shi);
        for (const auto& [key, v] : state) {
            if (v.is_zero()) continue;
            auto pos = acc.try_emplace(key.first, SymFun(trunc)).first;
            pos->second.add_term(key.second, v);
        }
    }
    if (lo > hi) lo = hi = 0;
    ZSeries<SymFun> out(SymFun(trunc), lo, hi);
    for (const auto& [z, v] : acc) out.add(z, v);
    return out;
}

SymFun plethysm_flat(const SymFun& f, const Alphabet& a) {
    for (const auto& atom : a.atoms())
        if (atom.z_power != 0) throw std::invalid_argument("alphabet depends on z: " + a.to_string());
    return plethysm(f, a).coefficient(0);
}

SymFun compose(const SymFun& f, const SymFun& g) {
    const int trunc = std::max(f.trunc(), g.trunc());
    std::map<int, SymFun> images;
    auto image = [&](int k) -> const SymFun& {
        auto it = images.find(k);
        if (it != images.end()) return it->second;
        SymFun r(trunc);
        for (const auto& [mu, c] : g.terms()) r.add_term(mu.scaled(k), c.substitute_power(k));
        return images.emplace(k, std::move(r)).first->second;
    };
    SymFun out(trunc);
    for (const auto& [lam, c] : f.terms()) {
        SymFun term = SymFun::constant(c, trunc);
        for (int k : lam.parts()) term *= image(k);
        out += term;
    }
    return out;
}

namespace {

// Omega of a single atom. For X-atoms the z^{mn} coefficient is h_n[atom];
// for constants it is the scalar h_n[c].
ZSeries<SymFun> omega_atom(const Atom& atom, int trunc, int window) {
    const int m = std::abs(atom.z_power);
    if (!atom.has_x && m == 0) throw std::invalid_argument("Omega of a z-free constant alphabet does not converge");
    int nmax = m == 0 ? trunc : window / m;
    if (atom.has_x) nmax = std::min(nmax, trunc);
    std::vector<QTRat> s(nmax + 1);
    for (int k = 1; k <= nmax; ++k) {
        s[k] = atom.coeff.substitute_power(k);
        if (atom.epsilon && k % 2 == 1) s[k] = -s[k];
    }
    // The series never terminates, so the high side is always cut.
    ZSeries<SymFun> out(SymFun(trunc), 0, m * nmax, false, m != 0);
    SymFun flat(trunc);
    for (int n = 0; n <= nmax; ++n) {
        SymFun hn(trunc);
        for (const auto& lam : partitions_of(n)) {
            QTRat c(Rational(1, 1) / Rational(z_lambda(lam)));
            for (int part : lam.parts()) c *= s[part];
            hn.add_term(atom.has_x ? lam : Partition(), c);
        }
        if (m == 0)
            flat += hn;
        else
            out.add(m * n, hn);
    }
    if (m == 0) out.add(0, flat);
    return atom.z_power < 0 ? out.reflected() : out;
}

}  // namespace

ZSeries<SymFun> omega_series(const Alphabet& a, int trunc, int window) {
    ZSeries<SymFun> out = ZSeries<SymFun>::monomial(SymFun(trunc), SymFun::constant(1, trunc), 0);
    for (const auto& atom : a.atoms()) out = out * omega_atom(atom, trunc, window);
    return out;
}

ZSeries<SymFun> omega_series(const Alphabet& a, int trunc) {
    int m = 1;
    for (const auto& atom : a.atoms()) m = std::max(m, std::abs(atom.z_power));
    return omega_series(a, trunc, m * trunc);
}

ZSeries<QTRat> h_of_rank1(int n, const ZMonomial& u, const ZMonomial& v) {
    if (n < 0) return ZSeries<QTRat>(QTRat(), 0, 0);
    if (n == 0) return ZSeries<QTRat>::monomial(QTRat(), QTRat(1), 0);
    QTRat vn(QTPoly::monomial(1, v.q * n, v.t * n));
    int zv = v.z * n;
    int lo = std::min(zv, zv + u.z), hi = std::max(zv, zv + u.z);
    ZSeries<QTRat> out(QTRat(), lo, hi);
    out.add(zv, vn);
    out.add(zv + u.z, -(vn * QTRat(QTPoly::monomial(1, u.q, u.t))));
    return out;
}

}  // namespace qtsym
