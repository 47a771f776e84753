#include "qtsym/combinat.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace qtsym {

namespace {

std::string bracket_list(const std::vector<int>& parts) {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + "]";
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive: " + bracket_list(parts_));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing: " + bracket_list(parts_));
        size_ += parts_[i];
    }
}

Partition Partition::from_parts(std::vector<int> parts) {
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::rectangle(int a, int k) { return Partition(std::vector<int>(k, a)); }

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int c = 0; c < largest(); ++c) {
        int len = 0;
        for (int p : parts_)
            if (p > c) ++len;
        out.push_back(len);
    }
    return Partition(std::move(out));
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(largest() + 1, 0);
    for (int p : parts_) ++m[p];
    return m;
}

Partition Partition::merged(const Partition& o) const {
    std::vector<int> parts;
    parts.reserve(parts_.size() + o.parts_.size());
    std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(), std::back_inserter(parts),
               std::greater<>());
    Partition r;
    r.parts_ = std::move(parts);
    r.size_ = size_ + o.size_;
    return r;
}

Partition Partition::scaled(int k) const {
    std::vector<int> parts = parts_;
    for (auto& p : parts) p *= k;
    return Partition(std::move(parts));
}

std::string Partition::to_string() const { return bracket_list(parts_); }

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    // Reverse lexicographic: larger leading parts come first.
    return b.parts_ <=> a.parts_;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("composition parts must be positive: " + bracket_list(parts_));
        size_ += p;
    }
}

std::string Composition::to_string() const { return bracket_list(parts_); }

std::vector<Cell> cell_stats(const Partition& lambda) {
    std::vector<Cell> cells;
    Partition conj = lambda.conjugate();
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) {
            Cell x;
            x.row = r;
            x.col = c;
            x.arm = lambda[r] - c - 1;
            x.coarm = c;
            x.leg = conj[c] - r - 1;
            x.coleg = r;
            cells.push_back(x);
        }
    }
    return cells;
}

int nstat(const Partition& lambda) {
    int n = 0;
    for (int i = 0; i < lambda.length(); ++i) n += i * lambda[i];
    return n;
}

QTPoly t_mu(const Partition& mu) { return QTPoly::monomial(1, nstat(mu.conjugate()), nstat(mu)); }

QTPoly w_mu(const Partition& mu) {
    QTPoly w(1);
    for (const auto& x : cell_stats(mu)) {
        w *= QTPoly::q(x.arm) - QTPoly::t(x.leg + 1);
        w *= QTPoly::t(x.leg) - QTPoly::q(x.arm + 1);
    }
    return w;
}

Integer z_lambda(const Partition& lambda) {
    Integer z = 1;
    auto m = lambda.multiplicities();
    for (std::size_t i = 1; i < m.size(); ++i) {
        for (int j = 0; j < m[i]; ++j) z *= static_cast<long>(i);
        for (int j = 2; j <= m[i]; ++j) z *= j;
    }
    return z;
}

int sign_of(const Partition& lambda) { return ((lambda.size() - lambda.length()) % 2 == 0) ? 1 : -1; }

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            cur.push_back(p);
            rec(remaining - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (s & (Subset{1} << i)) out.push_back(i + 1);
    return out;
}

Subset subset_from(const std::vector<int>& elements) {
    Subset s = 0;
    for (int e : elements) {
        if (e < 1 || e > 32) throw std::invalid_argument("subset element out of range");
        s |= Subset{1} << (e - 1);
    }
    return s;
}

std::string subset_to_string(Subset s) { return bracket_list(subset_elements(s)); }

std::map<Subset, long> syt_descents(const Partition& lambda) {
    std::map<Subset, long> counts;
    const int n = lambda.size();
    std::vector<int> filled(lambda.length(), 0);
    std::vector<int> row_of(n + 1, 0);
    std::function<void(int)> place = [&](int k) {
        if (k > n) {
            Subset des = 0;
            for (int i = 1; i < n; ++i)
                if (row_of[i + 1] > row_of[i]) des |= Subset{1} << (i - 1);
            ++counts[des];
            return;
        }
        for (int r = 0; r < lambda.length(); ++r) {
            if (filled[r] < lambda[r] && (r == 0 || filled[r - 1] > filled[r])) {
                ++filled[r];
                row_of[k] = r;
                place(k + 1);
                --filled[r];
            }
        }
    };
    place(1);
    return counts;
}

Integer syt_count(const Partition& lambda) {
    Integer num = 1, den = 1;
    for (int i = 2; i <= lambda.size(); ++i) num *= i;
    for (const auto& x : cell_stats(lambda)) den *= x.arm + x.leg + 1;
    return num / den;
}

namespace {

using CharKey = std::pair<std::vector<int>, std::vector<int>>;

// Beta-set (first-column hook lengths) of a partition with `len` beads.
std::vector<int> beta_set(const std::vector<int>& parts) {
    const int len = static_cast<int>(parts.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = parts[i] + (len - 1 - i);
    return beta;
}

std::vector<int> from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int p = beta[i] - (len - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return parts;
}

long character_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t mu_pos,
                        std::map<CharKey, long>& local);

std::shared_mutex char_mutex;
std::map<CharKey, long> char_memo;

long character_lookup(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t mu_pos,
                           std::map<CharKey, long>& local) {
    CharKey key{lambda, std::vector<int>(mu.begin() + mu_pos, mu.end())};
    {
        std::shared_lock lock(char_mutex);
        auto it = char_memo.find(key);
        if (it != char_memo.end()) return it->second;
    }
    auto it = local.find(key);
    if (it != local.end()) return it->second;
    long v = character_rec(lambda, mu, mu_pos, local);
    local.emplace(std::move(key), v);
    return v;
}

long character_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t mu_pos,
                        std::map<CharKey, long>& local) {
    if (mu_pos == mu.size()) return lambda.empty() ? 1 : 0;
    const int r = mu[mu_pos];
    auto beta = beta_set(lambda);
    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        auto moved = beta;
        moved[i] = target;
        long sub = character_lookup(from_beta(moved), mu, mu_pos + 1, local);
        total += (between % 2 == 0) ? sub : -sub;
    }
    return total;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("character needs |lambda| = |mu|");
    std::map<CharKey, long> local;
    long v = character_lookup(lambda.parts(), mu.parts(), 0, local);
    std::unique_lock lock(char_mutex);
    for (auto& [k, val] : local) char_memo.emplace(k, val);
    return v;
}

Subset descent_set(const std::vector<int>& word) {
    Subset s = 0;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] > word[i + 1]) s |= Subset{1} << i;
    return s;
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

}  // namespace qtsym
