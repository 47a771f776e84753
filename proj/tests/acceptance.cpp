// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qtsym/identities.hpp"

using namespace qtsym;

namespace {

struct Outcome {
    bool pass = true;
    int checks = 0;
    std::string detail;
};

struct Task {
    std::string name;
    Params params;
    CheckOptions opts;
};

Params P(std::map<std::string, long> ints) { return Params{std::move(ints), {}}; }

std::string describe(const IdentityCheck& r) {
    std::ostringstream s;
    s << r.name;
    if (!r.params.to_string().empty()) s << " " << r.params.to_string();
    if (r.witness) s << ": " << r.witness->term << " lhs=" << r.witness->lhs << " rhs=" << r.witness->rhs;
    return s.str();
}

// Every task must pass.
Outcome all_pass(const std::vector<Task>& tasks) {
    Outcome o;
    for (const auto& t : tasks) {
        ++o.checks;
        try {
            IdentityCheck r = check(t.name, t.params, t.opts);
            if (!r.verdict && o.pass) {
                o.pass = false;
                o.detail = "first failure " + describe(r);
            }
        } catch (const std::exception& ex) {
            if (o.pass) {
                o.pass = false;
                o.detail = "error in " + t.name + " " + t.params.to_string() + ": " + ex.what();
            }
        }
    }
    return o;
}

void add(std::vector<Task>& tasks, const std::string& name, Params p, int trunc = kDefaultTrunc) {
    CheckOptions o;
    o.trunc = trunc;
    tasks.push_back({name, std::move(p), o});
}

Outcome criterion_1() {
    std::vector<Task> t;
    for (int n = 1; n <= 6; ++n) {
        add(t, "macdonald-orth", P({{"n", n}}));
        add(t, "kostka-syt", P({{"n", n}}));
    }
    return all_pass(t);
}

Outcome criterion_2() {
    std::vector<Task> t;
    for (int n = 1; n <= 6; ++n) add(t, "shuffle", P({{"n", n}}));
    return all_pass(t);
}

Outcome criterion_3() {
    std::vector<Task> t;
    for (int n = 1; n <= 6; ++n)
        for (const auto& alpha : compositions_of(n)) {
            Params p = P({{"n", n}});
            p.lists["alpha"] = alpha.parts();
            add(t, "comp-shuffle", p);
        }
    return all_pass(t);
}

Outcome criterion_4() {
    std::vector<Task> t;
    for (int k = 1; 2 * k <= 8; ++k)
        for (int l = 0; 2 * k + l <= 8; ++l) {
            add(t, "main", P({{"k", k}, {"l", l}}));
            add(t, "main-pairing", P({{"k", k}, {"l", l}}));
        }
    return all_pass(t);
}

Outcome criterion_5() {
    std::vector<Task> t;
    for (int k = 1; k <= 4; ++k) {
        add(t, "m2k-expansion", P({{"k", k}}));
        add(t, "m2k-recursion", P({{"k", k}}));
    }
    for (int k = 0; k <= 5; ++k) add(t, "e2k-alt", P({{"k", k}}), 10);
    for (int k = 2; k <= 5; ++k)
        for (int n = 0; n <= 10; ++n) add(t, "petrie", P({{"k", k}, {"n", n}}), 10);
    const std::pair<int, int> ak[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}, {4, 2}};
    for (auto [a, k] : ak) add(t, "ak-recursion", P({{"a", a}, {"k", k}}));
    return all_pass(t);
}

Outcome criterion_6() {
    std::vector<Task> t;
    for (int n = 1; n <= 6; ++n) {
        add(t, "pn", P({{"n", n}}));
        add(t, "pn-pf", P({{"n", n}}));
    }
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; n + k <= 6; ++k) {
            add(t, "hook", P({{"n", n}, {"k", k}}));
            add(t, "hook-pf", P({{"n", n}, {"k", k}}));
        }
    return all_pass(t);
}

Outcome criterion_7() {
    std::vector<Task> t;
    add(t, "example-1-12", {});
    add(t, "example-2-16", {});
    Outcome o = all_pass(t);
    if (o.pass) {
        auto r = check("example-2-16", {});
        o.detail = r.notes.empty() ? "" : "search " + r.notes.front();
    }
    return o;
}

Outcome criterion_8() {
    std::vector<Task> t;
    for (int n = 1; n <= 6; ++n) add(t, "positivity-scan", P({{"n", n}}));
    for (int a = 2; a <= 6; ++a)
        for (int k = 1; a * k <= 6; ++k) add(t, "gak-scan", P({{"a", a}, {"k", k}}));
    return all_pass(t);
}

Outcome criterion_9() {
    std::vector<Task> t;
    for (const char* name : {"hall-adjoint", "star-adjoint", "bridge", "camh", "cvee-pbasis"})
        add(t, name, P({{"instances", 200}, {"max_degree", 6}}));
    return all_pass(t);
}

Outcome criterion_10() {
    std::vector<Task> t;
    for (int n = 1; n <= 6; ++n) add(t, "c-sum-e", P({{"n", n}}));
    for (int n = 1; n <= 5; ++n) add(t, "c-q1", P({{"n", n}}));
    for (int n = 1; n <= 7; ++n) add(t, "pf-count", P({{"n", n}}));
    return all_pass(t);
}

// Every single corruption of the main right-hand side must be caught.
Outcome criterion_11() {
    Outcome o;
    for (int k = 1; 2 * k <= 8; ++k)
        for (int l = 0; 2 * k + l <= 8; ++l)
            for (int term = 0; term < main_rhs_size(k, l); ++term)
                for (auto kind : {MutationKind::sign, MutationKind::qpower}) {
                    ++o.checks;
                    CheckOptions opts;
                    opts.mutation = Mutation{term, kind};
                    IdentityCheck r = check("main", P({{"k", k}, {"l", l}}), opts);
                    if ((r.verdict || !r.witness) && o.pass) {
                        o.pass = false;
                        o.detail = "mutation not caught: k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                   " term=" + std::to_string(term) +
                                   (kind == MutationKind::sign ? " (sign)" : " (q-power)");
                    }
                }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"Macdonald foundation: *-orthogonality and K~(1,1) = #SYT, n <= 6", criterion_1},
        {"Shuffle theorem, n <= 6", criterion_2},
        {"Compositional shuffle theorem, every alpha of n <= 6", criterion_3},
        {"Main theorem and its pairing table, 2k+l <= 8", criterion_4},
        {"m_{2^k} expansions, e_{2k} alternating sum, G(k,n), a^k recursion", criterion_5},
        {"Power-sum and hook results, with parking function forms", criterion_6},
        {"Worked examples: m_{2,2,1} expansion and the size-6 parking function", criterion_7},
        {"Schur positivity of signed nabla m_mu (n <= 6) and nabla G(a,ak) (ak <= 6)", criterion_8},
        {"Operator calculus, 200 seeded instances each, degree <= 6", criterion_9},
        {"Structural anchors: sum C_alpha = e_n, C_alpha at q=1, |PF_n|", criterion_10},
        {"Mutation sensitivity of the main identity", criterion_11},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("error: ") + ex.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failures;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%d checks, %.2f s", o.checks, secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << " (" << timing << ")";
        if (!o.detail.empty()) std::cout << " -- " << o.detail;
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
