#include "qtsym/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "qtsym/hallops.hpp"
#include "qtsym/macdonald.hpp"
#include "qtsym/parking.hpp"

namespace qtsym {

long Params::get(const std::string& key) const {
    auto it = ints.find(key);
    if (it == ints.end()) throw ParameterError("missing parameter '" + key + "'");
    return it->second;
}

long Params::get(const std::string& key, long fallback) const {
    auto it = ints.find(key);
    return it == ints.end() ? fallback : it->second;
}

std::string Params::to_string() const {
    std::string out;
    for (const auto& [k, v] : ints) out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
    for (const auto& [k, v] : lists) out += (out.empty() ? "" : " ") + k + "=" + Composition(v).to_string();
    return out;
}

std::optional<Witness> compare_schur(const SymFun& lhs, const SymFun& rhs) {
    if (lhs == rhs) return std::nullopt;
    Expansion a = basis_extract(lhs, Basis::s), b = basis_extract(rhs, Basis::s);
    std::map<Partition, bool> keys;
    for (const auto& [lam, c] : a) keys[lam];
    for (const auto& [lam, c] : b) keys[lam];
    for (const auto& [lam, unused] : keys) {
        QTRat x = a.count(lam) ? a.at(lam) : QTRat(), y = b.count(lam) ? b.at(lam) : QTRat();
        if (!(x == y)) return Witness{"s" + lam.to_string(), x.to_string(), y.to_string()};
    }
    // Unreachable for well-formed input: equal Schur vectors mean equal functions.
    return Witness{"p-basis", lhs.to_string(), rhs.to_string()};
}

std::optional<Witness> compare_fund(const FundVector& lhs, const FundVector& rhs) {
    if (lhs.n != rhs.n) return Witness{"degree", std::to_string(lhs.n), std::to_string(rhs.n)};
    std::map<Subset, bool> keys;
    for (const auto& [s, c] : lhs.coeffs) keys[s];
    for (const auto& [s, c] : rhs.coeffs) keys[s];
    for (const auto& [s, unused] : keys) {
        QTRat x = lhs.coeffs.count(s) ? lhs.coeffs.at(s) : QTRat();
        QTRat y = rhs.coeffs.count(s) ? rhs.coeffs.at(s) : QTRat();
        if (!(x == y)) return Witness{"F" + subset_to_string(s), x.to_string(), y.to_string()};
    }
    return std::nullopt;
}

namespace {

using Rng = std::mt19937_64;

int sign_pow(long e) { return e % 2 == 0 ? 1 : -1; }

void require(bool ok, const std::string& msg) {
    if (!ok) throw ParameterError(msg);
}

void require_degree(long d, const CheckOptions& o) {
    require(d <= o.trunc, "degree " + std::to_string(d) + " exceeds the truncation " + std::to_string(o.trunc));
}

void require_pf_size(long n) { require(n >= 1 && n <= 8, "parking function size must lie in 1..8"); }

SymFun mono(const std::vector<int>& parts, int trunc) {
    return basis_element(Basis::m, Partition::from_parts(parts), trunc);
}

// (a^i 1^j) as a part list
std::vector<int> block_parts(int a, int i, int j) {
    std::vector<int> parts(i, a);
    parts.insert(parts.end(), j, 1);
    return parts;
}

SymFun word_on(const std::vector<int>& word, SymFun f) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = c_apply(*it, f);
    return f;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

IdentityCheck sym_result(SymFun lhs, SymFun rhs) {
    IdentityCheck r;
    r.witness = compare_schur(lhs, rhs);
    r.verdict = !r.witness;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

IdentityCheck fund_result(FundVector lhs, FundVector rhs) {
    IdentityCheck r;
    r.witness = compare_fund(lhs, rhs);
    r.verdict = !r.witness;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

// Conjunction of sub-results; keeps the first failure.
void absorb(IdentityCheck& total, IdentityCheck part, const std::string& label) {
    if (part.verdict || !total.verdict) return;
    total.verdict = false;
    total.witness = part.witness;
    if (total.witness && !label.empty()) total.witness->term = label + " " + total.witness->term;
    total.lhs = std::move(part.lhs);
    total.rhs = std::move(part.rhs);
}

IdentityCheck passing() {
    IdentityCheck r;
    r.verdict = true;
    return r;
}

Composition composition_param(const Params& p, long n) {
    auto it = p.lists.find("alpha");
    if (it == p.lists.end()) throw ParameterError("missing parameter 'alpha'");
    Composition alpha(it->second);
    require(alpha.size() == n, "alpha must be a composition of n");
    return alpha;
}

// ---- shuffle-type identities ------------------------------------------------

IdentityCheck run_shuffle(const Params& p, const CheckOptions& o) {
    long n = p.get("n");
    require_pf_size(n);
    require_degree(n, o);
    return fund_result(to_fund(nabla(e_n(n, o.trunc)), n), pf_genfun(n, std::nullopt, nullptr, o.threads));
}

IdentityCheck run_comp_shuffle(const Params& p, const CheckOptions& o) {
    long n = p.get("n");
    require_pf_size(n);
    require_degree(n, o);
    std::vector<Composition> alphas;
    if (p.lists.count("alpha"))
        alphas.push_back(composition_param(p, n));
    else
        alphas = compositions_of(n);
    IdentityCheck total = passing();
    for (const auto& alpha : alphas) {
        auto part = fund_result(to_fund(nabla(c_word(alpha.parts(), o.trunc)), n), pf_genfun(n, alpha, nullptr, o.threads));
        absorb(total, std::move(part), "alpha=" + alpha.to_string());
    }
    return total;
}

IdentityCheck run_pn(const Params& p, const CheckOptions& o) {
    long n = p.get("n");
    require(n >= 1, "n must be positive");
    require_degree(n, o);
    SymFun rhs(o.trunc);
    for (const auto& alpha : compositions_of(n)) rhs += c_word(alpha.parts(), o.trunc).scaled(QTRat(q_integer(alpha[0])));
    return sym_result(p_n(n, o.trunc).scaled(sign_pow(n - 1)), rhs);
}

IdentityCheck run_pn_pf(const Params& p, const CheckOptions& o) {
    long n = p.get("n");
    require_pf_size(n);
    require_degree(n, o);
    PFWeight w = [](const ParkingFunction&, const PFStats& s) { return q_integer(s.ret); };
    return fund_result(to_fund(nabla(p_n(n, o.trunc)).scaled(sign_pow(n - 1)), n), pf_genfun(n, std::nullopt, w, o.threads));
}

void require_hook(long n, long k, const CheckOptions& o) {
    require(n >= 2 && k >= 1, "hook identities need n >= 2 and k >= 1");
    require_degree(n + k, o);
}

IdentityCheck run_hook(const Params& p, const CheckOptions& o) {
    long n = p.get("n"), k = p.get("k");
    require_hook(n, k, o);
    SymFun rhs(o.trunc);
    for (int a = 1; a <= n; ++a) {
        QTPoly weight(k + 1);
        for (int i = 1; i <= a - 1; ++i) weight += QTPoly::q(n - i);
        SymFun inner(o.trunc);
        for (const auto& tau : compositions_of(n - a))
            for (int b = 0; b <= k; ++b)
                for (const auto& rho : compositions_of(k - b))
                    inner += c_word(concat(concat(tau.parts(), {a + b}), rho.parts()), o.trunc);
        rhs += inner.scaled(QTRat(weight));
    }
    SymFun lhs = mono(block_parts(static_cast<int>(n), 1, static_cast<int>(k)), o.trunc).scaled(sign_pow(n - 1));
    return sym_result(lhs, rhs);
}

IdentityCheck run_hook_pf(const Params& p, const CheckOptions& o) {
    long n = p.get("n"), k = p.get("k");
    require_hook(n, k, o);
    require_pf_size(n + k);
    const int ni = static_cast<int>(n), ki = static_cast<int>(k);
    PFWeight w = [ni, ki](const ParkingFunction& pf, const PFStats&) { return qpoly(ni, ki, pf); };
    SymFun lhs = nabla(mono(block_parts(ni, 1, ki), o.trunc)).scaled(sign_pow(n - 1));
    return fund_result(to_fund(lhs, ni + ki), pf_genfun(ni + ki, std::nullopt, w, o.threads));
}

// ---- the m_{2^k} family -----------------------------------------------------

long require_k(const Params& p, const CheckOptions& o, long factor = 2) {
    long k = p.get("k");
    require(k >= 1, "k must be positive");
    require_degree(factor * k, o);
    return k;
}

SymFun signed_m2k(long k, int trunc) { return mono(block_parts(2, static_cast<int>(k), 0), trunc).scaled(sign_pow(k)); }

IdentityCheck run_m2k_expansion(const Params& p, const CheckOptions& o) {
    long k = require_k(p, o);
    SymFun rhs = e_n(2 * k, o.trunc);
    // compositions alpha with |alpha| <= k, by total size
    for (int size = 1; size <= k; ++size)
        for (const auto& alpha : compositions_of(size)) {
            std::vector<int> word;
            for (int part : alpha.parts()) word.push_back(2 * part);
            SymFun term = word_on(word, e_n(static_cast<int>(2 * k - 2 * size), o.trunc));
            rhs += term.scaled(QTRat(QTPoly::q(alpha.length())));
        }
    return sym_result(signed_m2k(k, o.trunc), rhs);
}

IdentityCheck run_m2k_recursion(const Params& p, const CheckOptions& o) {
    long k = require_k(p, o);
    SymFun sum(o.trunc);
    for (int i = 1; i <= k; ++i) sum += c_apply(2 * i, signed_m2k(k - i, o.trunc));
    return sym_result(signed_m2k(k, o.trunc), e_n(2 * k, o.trunc) + sum.scaled(QTRat(QTPoly::q())));
}

IdentityCheck run_m2k_erun(const Params& p, const CheckOptions& o) {
    long k = require_k(p, o);
    const int n = static_cast<int>(2 * k);
    SymFun target = signed_m2k(k, o.trunc);
    SymFun rhs(o.trunc);
    for (const auto& alpha : compositions_of(n))
        rhs += c_word(alpha.parts(), o.trunc).scaled(QTRat(q_integer(erun(alpha) + 1)));
    IdentityCheck total = passing();
    absorb(total, sym_result(target, rhs), "operator-form");
    if (n <= 8) {
        PFWeight w = [](const ParkingFunction&, const PFStats& s) { return q_integer(erun(s.touch) + 1); };
        absorb(total, fund_result(to_fund(nabla(target), n), pf_genfun(n, std::nullopt, w, o.threads)), "pf-form");
    } else {
        total.notes.push_back("pf-form skipped above size 8");
    }
    return total;
}

IdentityCheck run_e2k_alt(const Params& p, const CheckOptions& o) {
    long k = p.get("k");
    require(k >= 0, "k must be nonnegative");
    require_degree(2 * k, o);
    SymFun rhs(o.trunc);
    for (int i = 0; i <= k; ++i)
        rhs += (mono(block_parts(2, i, 0), o.trunc) * h_n(static_cast<int>(2 * k - 2 * i), o.trunc)).scaled(sign_pow(i));
    return sym_result(e_n(static_cast<int>(2 * k), o.trunc), rhs);
}

IdentityCheck run_petrie(const Params& p, const CheckOptions& o) {
    long k = p.get("k"), n = p.get("n");
    require(k >= 2 && n >= 0, "petrie needs k >= 2 and n >= 0");
    require_degree(n, o);
    SymFun rhs(o.trunc);
    for (int i = 0; k * i <= n; ++i)
        rhs += (mono(block_parts(static_cast<int>(k), i, 0), o.trunc) * h_n(static_cast<int>(n - k * i), o.trunc)).scaled(sign_pow(i));
    return sym_result(petrie(static_cast<int>(k), static_cast<int>(n), o.trunc), rhs);
}

IdentityCheck run_ak_recursion(const Params& p, const CheckOptions& o) {
    long a = p.get("a"), k = p.get("k");
    require(a >= 2 && k >= 1, "needs a >= 2 and k >= 1");
    require_degree(a * k, o);
    auto signed_m = [&](long j) {
        return mono(block_parts(static_cast<int>(a), static_cast<int>(j), 0), o.trunc).scaled(sign_pow((a - 1) * j));
    };
    SymFun sum(o.trunc);
    for (int i = 1; i <= k; ++i) sum += c_apply(static_cast<int>(a * i), signed_m(k - i));
    SymFun rhs = sum.scaled(QTRat(QTPoly::q(static_cast<int>(a - 1)))) +
                 petrie(static_cast<int>(a), static_cast<int>(a * k), o.trunc).scaled(sign_pow(a * k));
    return sym_result(signed_m(k), rhs);
}

// ---- the main recursion -----------------------------------------------------

struct MainTerm {
    QTPoly coeff;
    SymFun f;
};

void require_main(long k, long l, const CheckOptions& o) {
    require(k >= 1 && l >= 0, "needs k >= 1 and l >= 0");
    require_degree(2 * k + l, o);
}

// binom(k+l,k) e_{2k+l} followed by the q C_{2i+j}(...) terms, i-major.
std::vector<MainTerm> main_terms(int k, int l, int trunc) {
    std::vector<MainTerm> terms;
    terms.push_back({QTPoly(Rational(binomial(k + l, k))), e_n(2 * k + l, trunc)});
    for (int i = 1; i <= k; ++i)
        for (int j = 0; j <= l; ++j) {
            QTPoly c = QTPoly::q() * QTPoly(Rational(binomial(i - 1 + j, i - 1)));
            SymFun inner = mono(block_parts(2, k - i, l - j), trunc).scaled(sign_pow(k - i));
            terms.push_back({c, c_apply(2 * i + j, inner)});
        }
    return terms;
}

SymFun signed_main_lhs(int k, int l, int trunc) { return mono(block_parts(2, k, l), trunc).scaled(sign_pow(k)); }

IdentityCheck run_main(const Params& p, const CheckOptions& o) {
    long k = p.get("k"), l = p.get("l");
    require_main(k, l, o);
    auto terms = main_terms(static_cast<int>(k), static_cast<int>(l), o.trunc);
    if (o.mutation) {
        int idx = o.mutation->term;
        require(idx >= 0 && idx < static_cast<int>(terms.size()), "mutation term index out of range");
        if (o.mutation->kind == MutationKind::sign)
            terms[idx].coeff = -terms[idx].coeff;
        else
            terms[idx].coeff *= QTPoly::q();
    }
    SymFun rhs(o.trunc);
    for (const auto& t : terms) rhs += t.f.scaled(QTRat(t.coeff));
    auto r = sym_result(signed_main_lhs(static_cast<int>(k), static_cast<int>(l), o.trunc), rhs);
    if (o.mutation)
        r.notes.push_back(std::string("mutated term ") + std::to_string(o.mutation->term) +
                          (o.mutation->kind == MutationKind::sign ? " (sign)" : " (q-power)"));
    return r;
}

IdentityCheck run_main_pairing(const Params& p, const CheckOptions& o) {
    long k = p.get("k"), l = p.get("l");
    require_main(k, l, o);
    const int ki = static_cast<int>(k), li = static_cast<int>(l), n = 2 * ki + li;
    auto terms = main_terms(ki, li, o.trunc);
    SymFun qsum(o.trunc);
    for (std::size_t i = 1; i < terms.size(); ++i) qsum += terms[i].f.scaled(QTRat(terms[i].coeff));
    const Partition top = Partition::from_parts(block_parts(2, ki, li));
    const Partition column = Partition::rectangle(1, n);
    IdentityCheck r = passing();
    for (const auto& lam : partitions_of(n)) {
        QTRat got = hall(qsum, basis_element(Basis::h, lam, o.trunc));
        QTRat want;
        if (lam == top) want = QTRat(sign_pow(k));
        if (lam == column) want = QTRat(Rational(-binomial(k + l, k)));
        if (!(got == want)) {
            r.verdict = false;
            r.witness = Witness{"h" + lam.to_string(), got.to_string(), want.to_string()};
            break;
        }
    }
    return r;
}

IdentityCheck run_example_1_12(const Params&, const CheckOptions& o) {
    require_degree(5, o);
    const int tr = o.trunc;
    const QTRat q(QTPoly::q()), q2(QTPoly::q(2));
    SymFun rhs = e_n(5, tr).scaled(3);
    rhs += c_apply(2, e_n(3, tr)).scaled(q * QTRat(2));
    rhs += c_apply(3, e_n(2, tr)).scaled(q);
    rhs += c_apply(4, e_n(1, tr)).scaled(q);
    rhs += c_word({5}, tr).scaled(q * QTRat(2));
    rhs += word_on({2, 2}, e_n(1, tr)).scaled(q2);
    rhs += c_word({2, 3}, tr).scaled(q2);
    rhs += c_word({3, 2}, tr).scaled(q2);
    return sym_result(mono({2, 2, 1}, tr), rhs);
}

// ---- positivity scans -------------------------------------------------------

IdentityCheck positivity_result(const SymFun& f, int sign, const std::string& label) {
    IdentityCheck r = passing();
    PositivityReport rep = nabla_positivity_report(f, sign);
    for (const auto& e : rep.entries)
        if (!e.nonnegative) {
            r.verdict = false;
            r.witness = Witness{label + " s" + e.lambda.to_string(), e.coeff.to_string(), "a polynomial in N[q,t]"};
            break;
        }
    return r;
}

IdentityCheck run_positivity_scan(const Params& p, const CheckOptions& o) {
    long n = p.get("n");
    require(n >= 1, "n must be positive");
    require_degree(n, o);
    IdentityCheck total = passing();
    for (const auto& mu : partitions_of(n)) {
        auto part = positivity_result(basis_element(Basis::m, mu, o.trunc), sign_of(mu), "mu=" + mu.to_string());
        absorb(total, std::move(part), "");
    }
    return total;
}

IdentityCheck run_gak_scan(const Params& p, const CheckOptions& o) {
    long a = p.get("a"), k = p.get("k");
    require(a >= 2 && k >= 1, "needs a >= 2 and k >= 1");
    require_degree(a * k, o);
    return positivity_result(petrie(static_cast<int>(a), static_cast<int>(a * k), o.trunc), sign_pow(a * k), "G");
}

// ---- structural anchors -----------------------------------------------------

IdentityCheck run_c_sum_e(const Params& p, const CheckOptions& o) {
    long n = p.get("n");
    require(n >= 0, "n must be nonnegative");
    require_degree(n, o);
    SymFun rhs(o.trunc);
    for (const auto& alpha : compositions_of(n)) rhs += c_word(alpha.parts(), o.trunc);
    return sym_result(e_n(n, o.trunc), rhs);
}

IdentityCheck run_c_q1(const Params& p, const CheckOptions& o) {
    long n = p.get("n");
    require(n >= 0, "n must be nonnegative");
    require_degree(n, o);
    IdentityCheck total = passing();
    for (const auto& alpha : compositions_of(n)) {
        SymFun h_alpha = SymFun::constant(1, o.trunc);
        for (int part : alpha.parts()) h_alpha *= h_n(part, o.trunc);
        SymFun lhs = specialize(c_word(alpha.parts(), o.trunc), Variable::q, 1);
        absorb(total, sym_result(lhs, h_alpha.scaled(sign_pow(alpha.size() - alpha.length()))),
               "alpha=" + alpha.to_string());
    }
    return total;
}

IdentityCheck run_pf_count(const Params& p, const CheckOptions&) {
    long n = p.get("n");
    require_pf_size(n);
    Integer expect = 1;
    for (long i = 0; i < n - 1; ++i) expect *= n + 1;
    long got = pf_count(static_cast<int>(n));
    IdentityCheck r = passing();
    if (Integer(got) != expect) {
        r.verdict = false;
        r.witness = Witness{"|PF_" + std::to_string(n) + "|", std::to_string(got), expect.get_str()};
    }
    return r;
}

IdentityCheck run_macdonald_orth(const Params& p, const CheckOptions& o) {
    long n = p.get("n");
    require(n >= 1, "n must be positive");
    require_degree(n, o);
    auto parts = partitions_of(n);
    std::vector<SymFun> h;
    for (const auto& mu : parts) h.push_back(htilde(mu, o.trunc));
    IdentityCheck r = passing();
    for (std::size_t i = 0; i < parts.size() && r.verdict; ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            QTRat got = star(h[i], h[j]);
            QTRat want = i == j ? QTRat(w_mu(parts[j])) : QTRat();
            if (!(got == want)) {
                r.verdict = false;
                r.witness = Witness{"<H" + parts[i].to_string() + ",H" + parts[j].to_string() + ">*", got.to_string(),
                                    want.to_string()};
                break;
            }
        }
    return r;
}

IdentityCheck run_kostka_syt(const Params& p, const CheckOptions& o) {
    long n = p.get("n");
    require(n >= 1, "n must be positive");
    require_degree(n, o);
    IdentityCheck r = passing();
    for (const auto& mu : partitions_of(n)) {
        const Expansion& col = kostka_column(mu);
        for (const auto& lam : partitions_of(n)) {
            QTRat k = col.count(lam) ? col.at(lam) : QTRat();
            QTRat at1 = specialize(specialize(k, Variable::q, 1), Variable::t, 1);
            QTRat want(Rational(syt_count(lam)));
            if (!(at1 == want)) {
                r.verdict = false;
                r.witness = Witness{"K" + lam.to_string() + mu.to_string() + "(1,1)", at1.to_string(), want.to_string()};
                return r;
            }
        }
    }
    return r;
}

IdentityCheck run_example_2_16(const Params&, const CheckOptions&) {
    const std::vector<int> sigma{5, 2, 4, 6, 3, 1};
    const Composition touch{2, 4};
    std::vector<std::pair<ParkingFunction, PFStats>> found;
    enumerate_pf(
        6,
        [&](const ParkingFunction& pf) {
            PFStats s = stats(pf);
            if (s.area == 5 && s.sigma == sigma) found.emplace_back(pf, s);
        },
        touch);
    // Several fillings can share sigma, area and touch; the check asks for one
    // with the expected dinv, ret and ides and lists every match.
    const std::string want = "dinv=3 ret=2 ides=[1,3,4]";
    IdentityCheck r;
    r.notes.push_back("matches=" + std::to_string(found.size()) + (found.size() == 1 ? " (unique)" : ""));
    for (const auto& [pf, s] : found) {
        const std::string got = "dinv=" + std::to_string(s.dinv) + " ret=" + std::to_string(s.ret) +
                                " ides=" + subset_to_string(s.ides);
        r.notes.push_back("rows=" + pf.rows_string() + " " + got);
        if (got == want) r.verdict = true;
    }
    if (!r.verdict) r.witness = Witness{"search", found.empty() ? "no match" : r.notes.back(), want};
    return r;
}

// ---- randomized operator checks ---------------------------------------------

SymFun random_symfun(int degree, Rng& rng, int trunc) {
    static const Basis bases[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};
    auto parts = partitions_of(degree);
    std::uniform_int_distribution<int> nterms(1, 3), pick_basis(0, 4), pick_part(0, static_cast<int>(parts.size()) - 1),
        coeff(-3, 3), expo(0, 2);
    SymFun f(trunc);
    for (int i = nterms(rng); i > 0; --i) {
        int c = 0;
        while (c == 0) c = coeff(rng);
        Basis b = bases[pick_basis(rng)];
        const Partition& lam = parts[pick_part(rng)];
        int qe = expo(rng), te = expo(rng);
        f += basis_element(b, lam, trunc).scaled(QTRat(QTPoly::monomial(c, qe, te)));
    }
    return f;
}

Partition random_partition(int n, Rng& rng) {
    auto parts = partitions_of(n);
    return parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
}

struct RandomSetup {
    long instances;
    int max_degree;
};

RandomSetup random_setup(const Params& p, const CheckOptions& o) {
    RandomSetup s{p.get("instances", 200), static_cast<int>(p.get("max_degree", 6))};
    require(s.instances >= 1, "instances must be positive");
    require(s.max_degree >= 1, "max_degree must be positive");
    require_degree(s.max_degree, o);
    return s;
}

// Runs `one` per instance; it returns (lhs, rhs, description).
IdentityCheck random_check(const Params& p, const CheckOptions& o,
                           const std::function<std::tuple<QTRat, QTRat, std::string>(Rng&, int)>& one) {
    RandomSetup s = random_setup(p, o);
    Rng rng(o.seed);
    IdentityCheck r = passing();
    long failures = 0;
    for (long i = 0; i < s.instances; ++i) {
        auto [lhs, rhs, what] = one(rng, s.max_degree);
        if (lhs == rhs) continue;
        ++failures;
        if (r.verdict) r.witness = Witness{"instance " + std::to_string(i) + ": " + what, lhs.to_string(), rhs.to_string()};
        r.verdict = false;
    }
    r.notes.push_back("instances=" + std::to_string(s.instances) + " failures=" + std::to_string(failures) +
                      " seed=" + std::to_string(o.seed));
    return r;
}

int random_a(Rng& rng, int max_degree) { return std::uniform_int_distribution<int>(1, std::min(4, max_degree))(rng); }

int random_between(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

IdentityCheck run_hall_adjoint(const Params& p, const CheckOptions& o) {
    return random_check(p, o, [&](Rng& rng, int d) {
        int a = random_a(rng, d), df = random_between(rng, a, d);
        SymFun f = random_symfun(df, rng, o.trunc), g = random_symfun(df - a, rng, o.trunc);
        return std::tuple{hall(f, c_apply(a, g)), hall(c_vee(a, f), g),
                          "a=" + std::to_string(a) + " f=" + f.to_string() + " g=" + g.to_string()};
    });
}

IdentityCheck run_star_adjoint(const Params& p, const CheckOptions& o) {
    return random_check(p, o, [&](Rng& rng, int d) {
        int a = random_a(rng, d), df = random_between(rng, a, d);
        SymFun f = random_symfun(df, rng, o.trunc), g = random_symfun(df - a, rng, o.trunc);
        // Adjoint for the *-product on both sides.
        return std::tuple{star(f, c_apply(a, g)), star(c_star(a, f), g),
                          "a=" + std::to_string(a) + " f=" + f.to_string() + " g=" + g.to_string()};
    });
}

IdentityCheck run_bridge(const Params& p, const CheckOptions& o) {
    return random_check(p, o, [&](Rng& rng, int d) {
        int n = random_between(rng, 0, d);
        SymFun f = random_symfun(n, rng, o.trunc), g = random_symfun(n, rng, o.trunc);
        return std::tuple{hall(f, g), star(f, hall_to_star(g)), "f=" + f.to_string() + " g=" + g.to_string()};
    });
}

IdentityCheck run_camh(const Params& p, const CheckOptions& o) {
    return random_check(p, o, [&](Rng& rng, int d) {
        int a = random_a(rng, d), m = random_between(rng, 0, d - a);
        Partition mu = random_partition(m, rng), lam = random_partition(m + a, rng);
        return std::tuple{hall(c_apply(a, basis_element(Basis::m, mu, o.trunc)), basis_element(Basis::h, lam, o.trunc)),
                          camh_pairing(a, mu, lam, o.trunc),
                          "a=" + std::to_string(a) + " mu=" + mu.to_string() + " lambda=" + lam.to_string()};
    });
}

IdentityCheck run_cvee_pbasis(const Params& p, const CheckOptions& o) {
    return random_check(p, o, [&](Rng& rng, int d) {
        int a = random_a(rng, d), n = random_between(rng, a, d);
        Partition lam = random_partition(n, rng), mu = random_partition(n - a, rng);
        return std::tuple{hall(c_vee(a, basis_element(Basis::p, lam, o.trunc)), basis_element(Basis::p, mu, o.trunc)),
                          cvee_power_pairing(a, lam, mu),
                          "a=" + std::to_string(a) + " lambda=" + lam.to_string() + " mu=" + mu.to_string()};
    });
}

// ---- registry ---------------------------------------------------------------

using Runner = IdentityCheck (*)(const Params&, const CheckOptions&);

struct Entry {
    IdentityInfo info;
    Runner run;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {{"shuffle", "nabla e_n equals the parking function sum of q^dinv t^area F_ides", {"n"}}, run_shuffle},
        {{"comp-shuffle", "nabla C_alpha equals the parking function sum restricted to touch = alpha", {"n", "alpha?"}},
         run_comp_shuffle},
        {{"pn", "(-1)^(n-1) p_n = sum over alpha of [alpha_1]_q C_alpha", {"n"}}, run_pn},
        {{"pn-pf", "(-1)^(n-1) nabla p_n equals the [ret]_q weighted parking function sum", {"n"}}, run_pn_pf},
        {{"hook", "(-1)^(n-1) m_{n,1^k} as a triple sum of C-words", {"n", "k"}}, run_hook},
        {{"hook-pf", "(-1)^(n-1) nabla m_{n,1^k} equals the qpoly weighted parking function sum", {"n", "k"}}, run_hook_pf},
        {{"m2k-expansion", "(-1)^k m_{2^k} = e_{2k} + sum of q^i C_{2 alpha} e_{2k-2|alpha|}", {"k"}}, run_m2k_expansion},
        {{"m2k-recursion", "(-1)^k m_{2^k} = e_{2k} + q sum C_{2i}((-1)^(k-i) m_{2^(k-i)})", {"k"}}, run_m2k_recursion},
        {{"m2k-erun", "(-1)^k m_{2^k} through [erun+1]_q, as C-words and as a parking function sum", {"k"}}, run_m2k_erun},
        {{"e2k-alt", "e_{2k} = sum (-1)^i m_{2^i} h_{2k-2i}", {"k"}}, run_e2k_alt},
        {{"petrie", "G(k,n) = sum (-1)^i m_{k^i} h_{n-ki}", {"k", "n"}}, run_petrie},
        {{"ak-recursion", "recursion for (-1)^((a-1)k) m_{a^k} through C_{ai} and G(a,ak)", {"a", "k"}}, run_ak_recursion},
        {{"main", "recursion for (-1)^k m_{2^k 1^l} through binomial e and q C_{2i+j} terms", {"k", "l"}}, run_main},
        {{"main-pairing", "pairings of the q-part of the main recursion with every h_lambda", {"k", "l"}}, run_main_pairing},
        {{"example-1-12", "eight-term C-expansion of m_{2,2,1}", {}}, run_example_1_12},
        {{"positivity-scan", "(-1)^(|mu|-l(mu)) nabla m_mu is Schur positive for all mu of n", {"n"}}, run_positivity_scan},
        {{"gak-scan", "(-1)^(ak) nabla G(a,ak) is Schur positive", {"a", "k"}}, run_gak_scan},
        {{"hall-adjoint", "<f, C_a g> = <Cvee_a f, g> on random instances", {"instances?", "max_degree?"}}, run_hall_adjoint},
        {{"star-adjoint", "<f, C_a g>_* = <Cstar_a f, g>_* on random instances", {"instances?", "max_degree?"}},
         run_star_adjoint},
        {{"bridge", "<f, g> = <f, g[-eps X/M]>_* on random instances", {"instances?", "max_degree?"}}, run_bridge},
        {{"camh", "<C_a m_mu, h_lambda> through the H-series formula on random instances", {"instances?", "max_degree?"}},
         run_camh},
        {{"cvee-pbasis", "<Cvee_a p_lambda, p_mu> closed form on random instances", {"instances?", "max_degree?"}},
         run_cvee_pbasis},
        {{"c-sum-e", "sum of C_alpha over alpha of n equals e_n", {"n"}}, run_c_sum_e},
        {{"c-q1", "C_alpha at q=1 equals (-1)^(|alpha|-l(alpha)) h_alpha", {"n"}}, run_c_q1},
        {{"pf-count", "|PF_n| = (n+1)^(n-1)", {"n"}}, run_pf_count},
        {{"macdonald-orth", "<H~_lambda, H~_mu>_* = [lambda=mu] w_mu", {"n"}}, run_macdonald_orth},
        {{"kostka-syt", "K~_{lambda,mu}(1,1) = #SYT(lambda)", {"n"}}, run_kostka_syt},
        {{"example-2-16", "PF_6 search: sigma=524631, area 5, touch (2,4) has dinv 3, ret 2, ides {1,3,4}", {}},
         run_example_2_16},
    };
    return entries;
}

const Entry& find_entry(const std::string& name) {
    for (const auto& e : registry())
        if (e.info.name == name) return e;
    throw UnknownIdentity("unknown identity '" + name + "'");
}

}  // namespace

const std::vector<IdentityInfo>& identity_list() {
    static const std::vector<IdentityInfo> list = [] {
        std::vector<IdentityInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return list;
}

int main_rhs_size(int k, int l) { return 1 + k * (l + 1); }

IdentityCheck check(const std::string& name, const Params& params, const CheckOptions& opts) {
    const Entry& entry = find_entry(name);
    auto start = std::chrono::steady_clock::now();
    IdentityCheck r = entry.run(params, opts);
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    r.name = name;
    r.params = params;
    return r;
}

std::vector<Params> default_sweep(const std::string& name, int d) {
    find_entry(name);
    std::vector<Params> out;
    auto one = [&](std::map<std::string, long> ints) { out.push_back(Params{std::move(ints), {}}); };
    if (name == "shuffle" || name == "comp-shuffle" || name == "pn-pf" || name == "pf-count") {
        for (int n = 1; n <= std::min(d, 8); ++n) one({{"n", n}});
    } else if (name == "pn" || name == "positivity-scan" || name == "macdonald-orth" || name == "kostka-syt") {
        for (int n = 1; n <= d; ++n) one({{"n", n}});
    } else if (name == "c-sum-e" || name == "c-q1") {
        for (int n = 0; n <= d; ++n) one({{"n", n}});
    } else if (name == "hook" || name == "hook-pf") {
        for (int n = 2; n <= d; ++n)
            for (int k = 1; n + k <= d && (name == "hook" || n + k <= 8); ++k) one({{"n", n}, {"k", k}});
    } else if (name == "m2k-expansion" || name == "m2k-recursion" || name == "m2k-erun") {
        for (int k = 1; 2 * k <= d; ++k) one({{"k", k}});
    } else if (name == "e2k-alt") {
        for (int k = 0; 2 * k <= d; ++k) one({{"k", k}});
    } else if (name == "petrie") {
        for (int k = 2; k <= 5; ++k)
            for (int n = 0; n <= d; ++n) one({{"k", k}, {"n", n}});
    } else if (name == "ak-recursion" || name == "gak-scan") {
        for (int a = 2; a <= d; ++a)
            for (int k = 1; a * k <= d; ++k) one({{"a", a}, {"k", k}});
    } else if (name == "main" || name == "main-pairing") {
        for (int k = 1; 2 * k <= d; ++k)
            for (int l = 0; 2 * k + l <= d; ++l) one({{"k", k}, {"l", l}});
    } else if (name == "example-1-12") {
        if (d >= 5) one({});
    } else if (name == "example-2-16") {
        if (d >= 6) one({});
    } else {
        // randomized operator checks
        one({{"instances", 200}, {"max_degree", d}});
    }
    return out;
}

std::vector<IdentityCheck> check_all(int max_degree, const CheckOptions& opts) {
    std::vector<std::pair<std::string, Params>> tasks;
    for (const auto& e : registry())
        for (auto& p : default_sweep(e.info.name, max_degree)) tasks.emplace_back(e.info.name, std::move(p));
    std::vector<IdentityCheck> results(tasks.size());
    const int workers = std::max(1, std::min<int>(opts.threads, static_cast<int>(tasks.size())));
    CheckOptions inner = opts;
    if (workers > 1) inner.threads = 1;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = check(tasks[i].first, tasks[i].second, inner);
            } catch (const std::exception& ex) {
                results[i].name = tasks[i].first;
                results[i].params = tasks[i].second;
                results[i].witness = Witness{"error", ex.what(), ""};
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return results;
}

}  // namespace qtsym
