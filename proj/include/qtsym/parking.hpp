#pragma once

// Parking functions as labeled Dyck paths, with their statistics.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtsym/combinat.hpp"
#include "qtsym/symfun.hpp"

namespace qtsym {

/// Row i (bottom to top) has area letter a[i] and car v[i].
struct ParkingFunction {
    std::vector<int> a;
    std::vector<int> v;

    int size() const { return static_cast<int>(a.size()); }
    /// Throws std::invalid_argument unless the rows form a labeled Dyck path.
    void validate() const;
    /// "a:v" pairs separated by spaces, e.g. "0:1 1:2 1:3".
    std::string rows_string() const;

    friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
};

ParkingFunction make_pf(const std::vector<std::pair<int, int>>& rows);

struct PFStats {
    int area = 0;
    int dinv = 0;
    Composition touch;
    int ret = 0;
    std::vector<int> sigma;
    Subset ides = 0;
};

PFStats stats(const ParkingFunction& p);

/// Area sequences of Dyck paths of size n, lexicographic. With a touch
/// filter only paths whose return blocks have exactly those sizes are kept.
std::vector<std::vector<int>> dyck_area_sequences(int n, const std::optional<Composition>& touch = std::nullopt);

/// Calls visit on every parking function with this area sequence, cars in
/// lexicographic order.
void enumerate_labelings(const std::vector<int>& area, const std::function<void(const ParkingFunction&)>& visit);

/// Streams PF_n in lexicographic order (area sequence, then cars).
void enumerate_pf(int n, const std::function<void(const ParkingFunction&)>& visit,
                  const std::optional<Composition>& touch = std::nullopt);

long pf_count(int n);

using PFWeight = std::function<QTPoly(const ParkingFunction&, const PFStats&)>;

/// sum weight(P) q^dinv t^area F_ides over P in PF_n (optionally with
/// touch(P) = filter), accumulated over `threads` workers.
FundVector pf_genfun(int n, const std::optional<Composition>& touch = std::nullopt, const PFWeight& weight = nullptr,
                     int threads = 1);

/// Length of the longest prefix of even parts.
int erun(const Composition& alpha);

/// k+1 plus q^{n-i} for i = 1, 2, ... while the diagonal point (n-i, n-i) is
/// not touched by P (P of size n+k).
QTPoly qpoly(int n, int k, const ParkingFunction& p);

}  // namespace qtsym
