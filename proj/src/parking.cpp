#include "qtsym/parking.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

namespace qtsym {

void ParkingFunction::validate() const {
    const int n = size();
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("parking function: area and car lists differ in length");
    if (n == 0) throw std::invalid_argument("parking function: empty");
    if (a[0] != 0) throw std::invalid_argument("parking function: first area letter must be 0");
    std::vector<bool> seen(n + 1, false);
    for (int i = 0; i < n; ++i) {
        if (a[i] < 0) throw std::invalid_argument("parking function: negative area letter");
        if (i > 0 && a[i] > a[i - 1] + 1) throw std::invalid_argument("parking function: area letter jumps by more than 1");
        if (i > 0 && a[i] == a[i - 1] + 1 && v[i] < v[i - 1])
            throw std::invalid_argument("parking function: cars must increase up a column");
        if (v[i] < 1 || v[i] > n || seen[v[i]]) throw std::invalid_argument("parking function: cars must be a permutation of 1..n");
        seen[v[i]] = true;
    }
}

std::string ParkingFunction::rows_string() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(a[i]) + ":" + std::to_string(v[i]);
    }
    return out;
}

ParkingFunction make_pf(const std::vector<std::pair<int, int>>& rows) {
    ParkingFunction p;
    for (const auto& [a, v] : rows) {
        p.a.push_back(a);
        p.v.push_back(v);
    }
    p.validate();
    return p;
}

PFStats stats(const ParkingFunction& p) {
    PFStats s;
    const int n = p.size();
    std::vector<int> touch;
    for (int i = 0; i < n; ++i) {
        s.area += p.a[i];
        if (p.a[i] == 0) touch.push_back(0);
        ++touch.back();
        for (int j = i + 1; j < n; ++j) {
            if (p.a[i] == p.a[j] && p.v[i] < p.v[j]) ++s.dinv;
            if (p.a[i] == p.a[j] + 1 && p.v[i] > p.v[j]) ++s.dinv;
        }
    }
    s.touch = Composition(touch);
    s.ret = touch.front();
    // Decreasing diagonal, then decreasing row.
    std::vector<int> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = i;
    std::sort(rows.begin(), rows.end(), [&](int x, int y) { return p.a[x] != p.a[y] ? p.a[x] > p.a[y] : x > y; });
    for (int r : rows) s.sigma.push_back(p.v[r]);
    s.ides = descent_set(inverse_permutation(s.sigma));
    return s;
}

std::vector<std::vector<int>> dyck_area_sequences(int n, const std::optional<Composition>& touch) {
    if (n < 1) throw std::invalid_argument("parking functions need n >= 1");
    if (touch && touch->size() != n) return {};
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // block = index of the current return block, len = rows in it so far
    std::function<void(int, int)> rec = [&](int block, int len) {
        const int i = static_cast<int>(cur.size());
        if (i == n) {
            if (!touch || len == (*touch)[block]) out.push_back(cur);
            return;
        }
        int top = i == 0 ? 0 : cur.back() + 1;
        for (int a = 0; a <= top; ++a) {
            if (i > 0 && a == 0) {
                // closes the current block
                if (touch && (len != (*touch)[block] || block + 1 >= touch->length())) continue;
                cur.push_back(0);
                rec(block + 1, 1);
            } else {
                if (touch && len + 1 > (*touch)[block]) continue;
                cur.push_back(a);
                rec(block, len + 1);
            }
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

void enumerate_labelings(const std::vector<int>& area, const std::function<void(const ParkingFunction&)>& visit) {
    const int n = static_cast<int>(area.size());
    // rest[i] = rows of the column containing row i that lie above it
    std::vector<int> rest(n, 0);
    for (int i = n - 2; i >= 0; --i)
        if (area[i + 1] == area[i] + 1) rest[i] = rest[i + 1] + 1;
    ParkingFunction p;
    p.a = area;
    p.v.assign(n, 0);
    std::vector<bool> used(n + 1, false);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            visit(p);
            return;
        }
        int lo = (i > 0 && area[i] == area[i - 1] + 1) ? p.v[i - 1] + 1 : 1;
        for (int c = lo; c <= n; ++c) {
            if (used[c]) continue;
            // enough larger free cars for the rest of this column
            int larger = 0;
            for (int d = c + 1; d <= n && larger < rest[i]; ++d)
                if (!used[d]) ++larger;
            if (larger < rest[i]) break;
            used[c] = true;
            p.v[i] = c;
            rec(i + 1);
            used[c] = false;
        }
    };
    rec(0);
}

void enumerate_pf(int n, const std::function<void(const ParkingFunction&)>& visit, const std::optional<Composition>& touch) {
    for (const auto& area : dyck_area_sequences(n, touch)) enumerate_labelings(area, visit);
}

long pf_count(int n) {
    long count = 0;
    enumerate_pf(n, [&](const ParkingFunction&) { ++count; });
    return count;
}

namespace {

using Accumulator = std::map<std::pair<Subset, Monomial>, Rational>;

void accumulate(Accumulator& acc, const ParkingFunction& p, const PFWeight& weight) {
    PFStats s = stats(p);
    if (!weight) {
        acc[{s.ides, {s.dinv, s.area}}] += 1;
        return;
    }
    QTPoly w = weight(p, s);
    for (const auto& term : w.terms()) acc[{s.ides, {term.mono.q + s.dinv, term.mono.t + s.area}}] += term.coeff;
}

}  // namespace

FundVector pf_genfun(int n, const std::optional<Composition>& touch, const PFWeight& weight, int threads) {
    auto areas = dyck_area_sequences(n, touch);
    threads = std::max(1, std::min<int>(threads, static_cast<int>(areas.size())));
    std::vector<Accumulator> partial(threads);
    std::atomic<std::size_t> next{0};
    auto work = [&](int id) {
        for (std::size_t i = next++; i < areas.size(); i = next++)
            enumerate_labelings(areas[i], [&](const ParkingFunction& p) { accumulate(partial[id], p, weight); });
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int id = 0; id < threads; ++id) pool.emplace_back(work, id);
        for (auto& th : pool) th.join();
    }
    Accumulator total;
    for (auto& part : partial)
        for (auto& [key, c] : part) total[key] += c;
    std::map<Subset, std::vector<Term>> grouped;
    for (auto& [key, c] : total)
        if (c != 0) grouped[key.first].push_back({key.second, c});
    FundVector out;
    out.n = n;
    for (auto& [s, terms] : grouped) out.add(s, QTRat(QTPoly(std::move(terms))));
    return out;
}

int erun(const Composition& alpha) {
    int r = 0;
    while (r < alpha.length() && alpha[r] % 2 == 0) ++r;
    return r;
}

QTPoly qpoly(int n, int k, const ParkingFunction& p) {
    if (p.size() != n + k) throw std::invalid_argument("qpoly needs a parking function of size n+k");
    QTPoly out(k + 1);
    // (j, j) is touched iff row j+1 starts on the diagonal.
    for (int j = n - 1; j >= 1; --j) {
        if (p.a[j] == 0) break;
        out += QTPoly::q(j);
    }
    return out;
}

}  // namespace qtsym
