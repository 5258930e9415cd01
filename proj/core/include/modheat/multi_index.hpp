// Multi-indices alpha in N^d and their graded enumeration.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "modheat/errors.hpp"

namespace modheat {

struct MultiIndex {
    std::vector<std::size_t> entries;

    std::size_t dim() const { return entries.size(); }
    std::size_t order() const {
        return std::accumulate(entries.begin(), entries.end(), std::size_t{0});
    }
    bool operator==(const MultiIndex&) const = default;
};

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// All alpha with |alpha| <= K, ordered by total degree then lexicographically
// within each degree. Consecutive runs of equal |alpha| are the coefficient
// groups of the spectral projections P_k.
inline std::vector<MultiIndex> enumerate_multi_indices(std::size_t d, std::size_t K) {
    if (d < 1) throw ValidationError("multi-index dimension must be >= 1");
    std::vector<MultiIndex> out;
    out.reserve(binomial(K + d, d));
    std::vector<std::size_t> cur(d, 0);
    for (std::size_t k = 0; k <= K; ++k) {
        std::fill(cur.begin(), cur.end(), 0);
        cur[0] = k;
        while (true) {
            out.push_back(MultiIndex{cur});
            if (cur[d - 1] == k) break;  // all mass in the last slot: done
            std::size_t i = d - 1;
            do { --i; } while (cur[i] == 0);
            std::size_t tail = 0;
            for (std::size_t j = i + 1; j < d; ++j) {
                tail += cur[j];
                cur[j] = 0;
            }
            cur[i] -= 1;
            cur[i + 1] = tail + 1;
        }
    }
    return out;
}

}  // namespace modheat
