#include "qtsym/macdonald.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace qtsym {

namespace {

struct FillingCell {
    int row, col, arm, leg;
    int below;  // reading-order index of the cell directly below, or -1
};

// Cells in reading order: top row first, left to right (French diagrams).
std::vector<FillingCell> reading_cells(const Partition& mu) {
    std::vector<FillingCell> cells;
    std::map<std::pair<int, int>, int> where;
    auto stats = cell_stats(mu);
    std::sort(stats.begin(), stats.end(), [](const Cell& a, const Cell& b) {
        return a.row != b.row ? a.row > b.row : a.col < b.col;
    });
    for (const auto& c : stats) {
        where[{c.row, c.col}] = static_cast<int>(cells.size());
        cells.push_back({c.row, c.col, c.arm, c.leg, -1});
    }
    for (auto& c : cells) {
        auto it = where.find({c.row - 1, c.col});
        if (it != where.end()) c.below = it->second;
    }
    return cells;
}

}  // namespace

FundVector htilde_fund(const Partition& mu) {
    const int n = mu.size();
    FundVector out;
    out.n = n;
    if (n == 0) {
        out.add(0, QTRat(1));
        return out;
    }
    auto cells = reading_cells(mu);
    // Attacking pairs (u, v), u before v in reading order.
    std::vector<std::pair<int, int>> attacks;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto& a = cells[u];
            const auto& b = cells[v];
            if (a.row == b.row || (a.row == b.row + 1 && a.col > b.col)) attacks.emplace_back(u, v);
        }
    std::map<std::tuple<Subset, int, int>, long> counts;
    std::vector<int> word(n), pos(n + 1);
    std::iota(word.begin(), word.end(), 1);
    do {
        int maj = 0, inv = 0;
        for (int u = 0; u < n; ++u) {
            int v = cells[u].below;
            if (v >= 0 && word[u] > word[v]) {
                maj += cells[u].leg + 1;
                inv -= cells[u].arm;
            }
        }
        for (const auto& [u, v] : attacks)
            if (word[u] > word[v]) ++inv;
        for (int i = 0; i < n; ++i) pos[word[i]] = i;
        Subset ides = 0;
        for (int i = 1; i < n; ++i)
            if (pos[i] > pos[i + 1]) ides |= Subset{1} << (i - 1);
        ++counts[{ides, inv, maj}];
    } while (std::next_permutation(word.begin(), word.end()));
    std::map<Subset, QTPoly> polys;
    for (const auto& [key, cnt] : counts) {
        auto [s, qe, te] = key;
        polys[s] += QTPoly::monomial(Rational(cnt), qe, te);
    }
    for (auto& [s, p] : polys) out.add(s, QTRat(std::move(p)));
    return out;
}

const Expansion& kostka_column(const Partition& mu) {
    static std::mutex m;
    static std::map<Partition, Expansion> cache;
    {
        std::lock_guard lock(m);
        auto it = cache.find(mu);
        if (it != cache.end()) return it->second;
    }
    Expansion col = fund_solve(htilde_fund(mu));
    std::lock_guard lock(m);
    return cache.emplace(mu, std::move(col)).first->second;
}

SymFun htilde(const Partition& mu, int trunc) { return basis_combine(Basis::s, kostka_column(mu), trunc); }

namespace {

// q^i - t^j
using FactorKey = std::pair<int, int>;

QTPoly factor_poly(const FactorKey& k) { return QTPoly::q(k.first) - QTPoly::t(k.second); }

// w_mu = sign * prod of binomial factors.
std::pair<int, std::map<FactorKey, int>> w_factors(const Partition& mu) {
    int sign = 1;
    std::map<FactorKey, int> f;
    for (const auto& c : cell_stats(mu)) {
        ++f[{c.arm, c.leg + 1}];
        ++f[{c.arm + 1, c.leg}];  // t^l - q^{a+1} = -(q^{a+1} - t^l)
        sign = -sign;
    }
    return {sign, f};
}

// Quotient of p by (q^i - t^j) when exact.
std::optional<QTPoly> divide_binomial(const QTPoly& p, const FactorKey& k) {
    if (p.is_zero()) return QTPoly();
    return divide_exact(p, factor_poly(k));
}

// Per-degree data for nabla f = sum_mu <f, H~_mu>_* T_mu / w_mu H~_mu.
// Everything is put over the common denominator L = lcm of the w_mu.
struct NablaTable {
    std::vector<Partition> parts;
    std::vector<Expansion> h;             // H~_mu in the p-basis
    std::vector<QTPoly> cof;              // T_mu L / w_mu
    std::map<Partition, QTPoly> weight;   // <p_rho, p_rho>_*
    std::map<FactorKey, int> lcm;
    QTPoly l_poly{1};
};

std::unique_ptr<NablaTable> build_nabla(int n) {
    auto table = std::make_unique<NablaTable>();
    table->parts = partitions_of(n);
    const auto& parts = table->parts;
    const std::size_t k = parts.size();

    table->h.resize(k);
    for (std::size_t i = 0; i < k; ++i) table->h[i] = htilde(parts[i], n).terms();
    for (const auto& rho : parts) table->weight.emplace(rho, star_weight(rho));

    auto& lcm = table->lcm;
    std::vector<std::pair<int, std::map<FactorKey, int>>> wf(k);
    for (std::size_t i = 0; i < k; ++i) {
        wf[i] = w_factors(parts[i]);
        for (const auto& [key, c] : wf[i].second) lcm[key] = std::max(lcm[key], c);
    }
    for (const auto& [key, c] : lcm) table->l_poly *= factor_poly(key).pow(c);
    table->cof.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        QTPoly c(wf[i].first);
        for (const auto& [key, cnt] : lcm) {
            auto it = wf[i].second.find(key);
            int have = it == wf[i].second.end() ? 0 : it->second;
            if (cnt > have) c *= factor_poly(key).pow(cnt - have);
        }
        table->cof[i] = std::move(c) * t_mu(parts[i]);
    }
    return table;
}

const NablaTable& nabla_table(int n) {
    static std::mutex m;
    static std::unordered_map<int, std::unique_ptr<NablaTable>> cache;
    std::lock_guard lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    return *cache.emplace(n, build_nabla(n)).first->second;
}

QTRat coef(const Expansion& e, const Partition& p) {
    auto it = e.find(p);
    return it == e.end() ? QTRat() : it->second;
}

// nabla of a homogeneous degree-n function given by its p-coefficients.
Expansion nabla_homogeneous(const Expansion& f, const NablaTable& table) {
    const std::size_t k = table.parts.size();
    std::vector<QTRat> scalar(k);
    for (std::size_t i = 0; i < k; ++i) {
        QTRat inner;
        for (const auto& [rho, c] : f) {
            QTRat hr = coef(table.h[i], rho);
            if (!hr.is_zero()) inner += c * hr * QTRat(table.weight.at(rho));
        }
        if (!inner.is_zero()) scalar[i] = inner * QTRat(table.cof[i]);
    }
    Expansion image;
    for (const auto& sigma : table.parts) {
        QTRat num;
        for (std::size_t i = 0; i < k; ++i) {
            if (scalar[i].is_zero()) continue;
            QTRat hs = coef(table.h[i], sigma);
            if (!hs.is_zero()) num += scalar[i] * hs;
        }
        if (num.is_zero()) continue;
        // Peel the binomial factors of L off the numerator one at a time.
        std::optional<QTPoly> cur = num.num();
        for (const auto& [key, cnt] : table.lcm) {
            for (int r = 0; r < cnt && cur; ++r) cur = divide_binomial(*cur, key);
            if (!cur) break;
        }
        QTRat value = cur ? QTRat::fraction(std::move(*cur), num.den()) : num / QTRat(table.l_poly);
        if (!value.is_zero()) image.emplace(sigma, std::move(value));
    }
    return image;
}

}  // namespace

SymFun nabla(const SymFun& f) {
    SymFun out(f.trunc());
    if (f.is_zero()) return out;
    for (int d = f.min_degree(); d <= f.max_degree(); ++d) {
        SymFun comp = f.component(d);
        if (comp.is_zero()) continue;
        for (const auto& [sigma, v] : nabla_homogeneous(comp.terms(), nabla_table(d))) out.add_term(sigma, v);
    }
    return out;
}

PositivityReport nabla_positivity_report(const SymFun& f, int sign) {
    PositivityReport report;
    SymFun g = nabla(f).scaled(QTRat(sign));
    Expansion schur = basis_extract(g, Basis::s);
    std::vector<int> degrees;
    for (int d = std::max(f.min_degree(), 0); d <= f.max_degree(); ++d)
        if (!f.component(d).is_zero()) degrees.push_back(d);
    for (int d : degrees)
        for (const auto& lam : partitions_of(d)) {
            PositivityEntry e;
            e.lambda = lam;
            auto it = schur.find(lam);
            if (it != schur.end()) e.coeff = it->second;
            e.polynomial = qt_is_polynomial(e.coeff);
            e.nonnegative = qt_is_nonneg_polynomial(e.coeff);
            report.verdict = report.verdict && e.nonnegative;
            report.entries.push_back(std::move(e));
        }
    return report;
}

}  // namespace qtsym
