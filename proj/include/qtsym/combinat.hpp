#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qtsym/exactalg.hpp"

namespace qtsym {

/// Integer partition, parts weakly decreasing and positive.
///
/// The total order (size ascending, then reverse-lexicographic) is the
/// canonical order of every partition-keyed map: [], [1], [2], [1,1], [3], ...
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    /// Sorts the parts first; zeros are dropped.
    static Partition from_parts(std::vector<int> parts);
    /// (a^k) as a partition; empty when k == 0.
    static Partition rectangle(int a, int k);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    Partition conjugate() const;
    /// m[i] = number of parts equal to i, for i = 0..largest().
    std::vector<int> multiplicities() const;
    /// Multiset union of parts.
    Partition merged(const Partition& o) const;
    /// Each part multiplied by k.
    Partition scaled(int k) const;

    std::string to_string() const;

    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Sequence of positive integers.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    std::string to_string() const;

    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A cell of a Young diagram in French convention (row 0 is the longest,
/// at the bottom) with its arm, leg, coarm and coleg.
struct Cell {
    int row = 0;
    int col = 0;
    int arm = 0;
    int leg = 0;
    int coarm = 0;
    int coleg = 0;
};

std::vector<Cell> cell_stats(const Partition& lambda);

/// n(lambda) = sum of colegs.
int nstat(const Partition& lambda);
/// t^{n(mu)} q^{n(mu')}
QTPoly t_mu(const Partition& mu);
/// prod over cells of (q^a - t^{l+1})(t^l - q^{a+1})
QTPoly w_mu(const Partition& mu);
/// prod_i i^{m_i} m_i!
Integer z_lambda(const Partition& lambda);
/// (-1)^{|lambda| - l(lambda)}
int sign_of(const Partition& lambda);

/// Partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);
/// Compositions of n in lexicographic order; compositions_of(0) = {()}.
std::vector<Composition> compositions_of(int n);

/// Subsets of {1, ..., n-1} are encoded as bitmasks: bit i-1 set iff i is in S.
using Subset = std::uint32_t;
std::vector<int> subset_elements(Subset s);
Subset subset_from(const std::vector<int>& elements);
std::string subset_to_string(Subset s);

/// Number of standard Young tableaux of shape lambda per descent set.
std::map<Subset, long> syt_descents(const Partition& lambda);
/// Hook-length count of standard Young tableaux.
Integer syt_count(const Partition& lambda);

/// Irreducible character chi^lambda evaluated on cycle type mu
/// (Murnaghan-Nakayama, memoized).
long mn_character(const Partition& lambda, const Partition& mu);

/// Descent set {i : w_i > w_{i+1}} of a word.
Subset descent_set(const std::vector<int>& word);
/// Inverse of a permutation of 1..n given in one-line notation.
std::vector<int> inverse_permutation(const std::vector<int>& perm);

}  // namespace qtsym
