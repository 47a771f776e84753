#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "qtsym/macdonald.hpp"
#include "qtsym/parking.hpp"

using namespace qtsym;

namespace {

QTRat qr(const QTPoly& p) { return QTRat(p); }

// Oracle: a parking function drawn as a lattice path of N and E steps
// from (0,0) to (n,n) staying weakly above y = x, cars on the N steps.
struct PathPF {
    std::string steps;     // 'N' / 'E'
    std::vector<int> cars; // car on the i-th north step
};

std::vector<std::string> dyck_words(int n) {
    std::vector<std::string> out;
    std::string w;
    std::function<void(int, int)> rec = [&](int north, int east) {
        if (north == n && east == n) {
            out.push_back(w);
            return;
        }
        if (north < n) {
            w.push_back('N');
            rec(north + 1, east);
            w.pop_back();
        }
        if (east < north) {
            w.push_back('E');
            rec(north, east + 1);
            w.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

// x-coordinate of each north step.
std::vector<int> north_columns(const std::string& steps) {
    std::vector<int> cols;
    int x = 0;
    for (char c : steps) {
        if (c == 'N')
            cols.push_back(x);
        else
            ++x;
    }
    return cols;
}

std::vector<PathPF> all_path_pfs(int n) {
    std::vector<PathPF> out;
    for (const auto& w : dyck_words(n)) {
        auto cols = north_columns(w);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            bool ok = true;
            for (int i = 0; i + 1 < n; ++i)
                if (cols[i] == cols[i + 1] && perm[i] > perm[i + 1]) ok = false;
            if (ok) out.push_back({w, perm});
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

struct OracleStats {
    std::vector<int> a;
    int area = 0;
    int dinv = 0;
    std::vector<int> touch;
    std::vector<int> sigma;
    Subset ides = 0;
    std::vector<bool> on_path;  // diagonal point (j, j), j = 0..n
};

OracleStats oracle_stats(const PathPF& p) {
    const int n = static_cast<int>(p.cars.size());
    OracleStats s;
    auto cols = north_columns(p.steps);
    // complete squares between the path and y = x in row i (0-based)
    for (int i = 0; i < n; ++i) s.a.push_back(i - cols[i]);
    for (int v : s.a) s.area += v;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (s.a[i] == s.a[j] && p.cars[i] < p.cars[j]) ++s.dinv;
            if (s.a[i] == s.a[j] + 1 && p.cars[i] > p.cars[j]) ++s.dinv;
        }
    // walk the path and record the diagonal points it passes through
    s.on_path.assign(n + 1, false);
    int x = 0, y = 0;
    s.on_path[0] = true;
    for (char c : p.steps) {
        (c == 'N' ? y : x)++;
        if (x == y) s.on_path[x] = true;
    }
    int last = 0;
    for (int j = 1; j <= n; ++j)
        if (s.on_path[j]) {
            s.touch.push_back(j - last);
            last = j;
        }
    // diagonals from the top, right to left
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::sort(rows.begin(), rows.end(), [&](int i, int j) { return s.a[i] != s.a[j] ? s.a[i] > s.a[j] : i > j; });
    for (int r : rows) s.sigma.push_back(p.cars[r]);
    // i is in ides iff i + 1 is read before i
    std::vector<int> pos(n + 1);
    for (int k = 0; k < n; ++k) pos[s.sigma[k]] = k;
    for (int i = 1; i < n; ++i)
        if (pos[i + 1] < pos[i]) s.ides |= Subset{1} << (i - 1);
    return s;
}

ParkingFunction to_pf(const PathPF& p) {
    auto st = oracle_stats(p);
    return ParkingFunction{st.a, p.cars};
}

FundVector oracle_genfun(int n, const std::function<QTPoly(const OracleStats&)>& weight) {
    FundVector v;
    v.n = n;
    for (const auto& p : all_path_pfs(n)) {
        auto s = oracle_stats(p);
        v.add(s.ides, qr(weight(s) * QTPoly::monomial(1, s.dinv, s.area)));
    }
    return v;
}

}  // namespace

TEST_CASE("counts") {
    CHECK(pf_count(1) == 1);
    CHECK(pf_count(2) == 3);
    CHECK(pf_count(4) == 125);
    for (int n = 1; n <= 7; ++n) {
        long expect = 1;
        for (int i = 0; i < n - 1; ++i) expect *= n + 1;
        CHECK(pf_count(n) == expect);
    }
    for (int n = 1; n <= 6; ++n) CHECK(static_cast<long>(all_path_pfs(n).size()) == pf_count(n));
}

TEST_CASE("statistics examples") {
    auto s1 = stats(make_pf({{0, 1}}));
    CHECK(s1.area == 0);
    CHECK(s1.dinv == 0);
    CHECK(s1.touch == Composition{1});
    CHECK(s1.ides == 0);

    auto s2 = stats(make_pf({{0, 1}, {1, 2}, {1, 3}}));
    CHECK(s2.area == 2);
    CHECK(s2.dinv == 1);
    CHECK(s2.touch == Composition{3});
    CHECK(s2.sigma == std::vector<int>{3, 2, 1});
    CHECK(s2.ides == subset_from({1, 2}));

    auto s3 = stats(make_pf({{0, 2}, {0, 1}, {1, 3}}));
    CHECK(s3.area == 1);
    CHECK(s3.dinv == 0);
    CHECK(s3.touch == Composition{1, 2});
    CHECK(s3.ret == 1);
    CHECK(s3.sigma == std::vector<int>{3, 1, 2});
    CHECK(s3.ides == subset_from({2}));

    CHECK(make_pf({{0, 1}, {1, 2}, {1, 3}}).rows_string() == "0:1 1:2 1:3");
}

TEST_CASE("invalid parking functions are rejected") {
    CHECK_THROWS_AS(make_pf({{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_pf({{0, 1}, {2, 2}, {0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_pf({{0, 2}, {1, 1}}), std::invalid_argument);  // column must increase
    CHECK_THROWS_AS(make_pf({{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_pf({{0, 1}, {0, 3}}), std::invalid_argument);
}

TEST_CASE("enumeration and statistics agree with the lattice-path oracle") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<ParkingFunction> listed;
        enumerate_pf(n, [&](const ParkingFunction& p) { listed.push_back(p); });
        CHECK(static_cast<long>(listed.size()) == pf_count(n));
        // lexicographic (area sequence, then cars) and duplicate-free
        for (std::size_t i = 1; i < listed.size(); ++i)
            CHECK(std::tie(listed[i - 1].a, listed[i - 1].v) < std::tie(listed[i].a, listed[i].v));
        std::set<std::pair<std::vector<int>, std::vector<int>>> have;
        for (const auto& p : listed) have.emplace(p.a, p.v);
        for (const auto& pp : all_path_pfs(n)) {
            ParkingFunction p = to_pf(pp);
            CHECK(have.count({p.a, p.v}) == 1);
            CHECK_NOTHROW(p.validate());
            auto want = oracle_stats(pp);
            auto got = stats(p);
            CHECK(got.area == want.area);
            CHECK(got.dinv == want.dinv);
            CHECK(got.touch.parts() == want.touch);
            CHECK(got.ret == want.touch.front());
            CHECK(got.sigma == want.sigma);
            CHECK(got.ides == want.ides);
            CHECK(got.ides == descent_set(inverse_permutation(got.sigma)));
        }
    }
}

TEST_CASE("touch filters partition the set") {
    for (int n = 1; n <= 6; ++n) {
        std::size_t total = 0;
        for (const auto& alpha : compositions_of(n)) {
            auto seqs = dyck_area_sequences(n, alpha);
            for (const auto& a : seqs) {
                ParkingFunction p{a, {}};
                for (int i = 1; i <= n; ++i) p.v.push_back(i);
                CHECK(stats(p).touch == alpha);
            }
            total += seqs.size();
        }
        CHECK(total == dyck_area_sequences(n).size());
    }
}

TEST_CASE("generating functions") {
    // n = 2: F_{} + (q + t) F_{1}
    FundVector two = pf_genfun(2);
    FundVector want{2, {}};
    want.add(0, 1);
    want.add(subset_from({1}), qr(QTPoly::q() + QTPoly::t()));
    CHECK(two == want);
    FundVector touch2 = pf_genfun(2, Composition{2});
    FundVector want2{2, {}};
    want2.add(subset_from({1}), qr(QTPoly::t()));
    CHECK(touch2 == want2);
    PFWeight ret_weight = [](const ParkingFunction&, const PFStats& s) { return q_integer(s.ret); };
    CHECK(pf_genfun(2, std::nullopt, ret_weight) == to_fund(-nabla(p_n(2)), 2));
    for (int n = 1; n <= 5; ++n) {
        CHECK(pf_genfun(n) == oracle_genfun(n, [](const OracleStats&) { return QTPoly(1); }));
        CHECK(pf_genfun(n) == to_fund(nabla(e_n(n)), n));
        CHECK(pf_genfun(n, std::nullopt, ret_weight, 3) ==
              oracle_genfun(n, [](const OracleStats& s) { return q_integer(s.touch.front()); }));
        FundVector by_touch{n, {}};
        for (const auto& alpha : compositions_of(n)) by_touch += pf_genfun(n, alpha);
        CHECK(by_touch == pf_genfun(n, std::nullopt, nullptr, 4));
    }
}

TEST_CASE("erun and qpoly") {
    CHECK(erun(Composition{2, 4, 1, 2}) == 2);
    CHECK(erun(Composition{1, 2}) == 0);
    CHECK(erun(Composition{2, 2, 2}) == 3);
    CHECK(erun(Composition{}) == 0);
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= 2; ++k) {
            const int size = n + k;
            for (const auto& pp : all_path_pfs(size)) {
                auto s = oracle_stats(pp);
                QTPoly want(k + 1);
                for (int j = n - 1; j >= 1 && !s.on_path[j]; --j) want += QTPoly::q(j);
                CHECK(qpoly(n, k, to_pf(pp)) == want);
            }
        }
    // touching every diagonal point gives k + 1
    CHECK(qpoly(3, 1, make_pf({{0, 1}, {0, 2}, {0, 3}, {0, 4}})) == QTPoly(2));
}

TEST_CASE("the size-6 constrained search") {
    std::vector<std::string> found;
    enumerate_pf(
        6,
        [&](const ParkingFunction& p) {
            auto s = stats(p);
            if (s.area == 5 && s.sigma == std::vector<int>{5, 2, 4, 6, 3, 1}) found.push_back(p.rows_string());
        },
        Composition{2, 4});
    std::sort(found.begin(), found.end());
    CHECK(found == std::vector<std::string>{"0:1 1:6 0:3 1:4 1:2 2:5", "0:1 1:6 0:3 1:4 2:5 1:2"});
    auto s = stats(make_pf({{0, 1}, {1, 6}, {0, 3}, {1, 4}, {2, 5}, {1, 2}}));
    CHECK(s.dinv == 3);
    CHECK(s.ret == 2);
    CHECK(s.ides == subset_from({1, 3, 4}));
}
