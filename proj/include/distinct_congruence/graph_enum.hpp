#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arith.hpp"

namespace distinct_congruence {

inline constexpr int kDefaultGraphKCap = 30;

/// Exact counts of simple graphs on k labeled vertices:
///   gprime(e, k)  connected graphs with e edges,
///   g(c, e, k)    graphs with e edges and exactly c components.
/// The g part is only present when built through component_counts().
class GraphCountTable {
public:
    /// Fills g'(e, k) for 1 <= k <= k_max.
    static GraphCountTable connected_counts(int k_max, int cap = kDefaultGraphKCap) {
        GraphCountTable t(k_max, cap);
        t.build_connected();
        return t;
    }

    /// Fills both g'(e, k) and g(c, e, k) for 1 <= k <= k_max.
    static GraphCountTable component_counts(int k_max, int cap = kDefaultGraphKCap) {
        GraphCountTable t(k_max, cap);
        t.build_connected();
        t.build_components();
        return t;
    }

    int k_max() const { return k_max_; }
    bool has_components() const { return !g_.empty(); }

    static std::uint64_t max_edges(int k) {
        return static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k - 1) / 2;
    }

    /// Zero outside 0 <= e <= C(k,2).
    ExactCount gprime(std::int64_t e, int k) const {
        require_k(k);
        if (e < 0 || static_cast<std::uint64_t>(e) > max_edges(k)) return 0;
        return gprime_[k][static_cast<std::size_t>(e)];
    }

    /// Zero outside 1 <= c <= k, 0 <= e <= C(k,2).
    ExactCount g(int c, std::int64_t e, int k) const {
        require_k(k);
        if (!has_components()) throw UsageError("graph table was built without component counts");
        if (c < 1 || c > k || e < 0 || static_cast<std::uint64_t>(e) > max_edges(k)) return 0;
        return g_[k][c][static_cast<std::size_t>(e)];
    }

private:
    GraphCountTable(int k_max, int cap) : k_max_(k_max) {
        if (k_max < 1 || k_max > cap) {
            throw UsageError("graph table k_max must lie in [1, " + std::to_string(cap) + "], got " +
                             std::to_string(k_max));
        }
    }

    void require_k(int k) const {
        if (k < 1 || k > k_max_) {
            throw UsageError("k = " + std::to_string(k) + " outside graph table range [1, " +
                             std::to_string(k_max_) + "]");
        }
    }

    // g'(e,k) = C(C(k,2), e) minus the graphs whose vertex-1 component has
    // j < k vertices: C(k-1, j-1) g'(e1, j) C(C(k-j,2), e-e1).
    void build_connected() {
        gprime_.assign(k_max_ + 1, {});
        for (int k = 1; k <= k_max_; ++k) {
            const std::uint64_t top = max_edges(k);
            auto& row = gprime_[k];
            row.assign(top + 1, 0);
            for (std::uint64_t e = 0; e <= top; ++e) row[e] = binomial(top, e);
            for (int j = 1; j < k; ++j) {
                const ExactInt ways = binomial(k - 1, j - 1);
                const std::uint64_t rest = max_edges(k - j);
                for (std::uint64_t e1 = 0; e1 <= max_edges(j); ++e1) {
                    const ExactInt& conn = gprime_[j][e1];
                    if (conn == 0) continue;
                    for (std::uint64_t e2 = 0; e2 <= rest; ++e2) {
                        row[e1 + e2] -= ways * conn * binomial(rest, e2);
                    }
                }
            }
        }
    }

    // g(c,e,k) = sum_j C(k-1, j-1) sum_e1 g'(e1, j) g(c-1, e-e1, k-j),
    // with g(0, 0, 0) = 1.
    void build_components() {
        g_.assign(k_max_ + 1, {});
        g_[0].assign(1, std::vector<ExactInt>(1, 0));
        g_[0][0][0] = 1;
        for (int k = 1; k <= k_max_; ++k) {
            const std::uint64_t top = max_edges(k);
            g_[k].assign(k + 1, std::vector<ExactInt>(top + 1, 0));
            for (int c = 1; c <= k; ++c) {
                auto& row = g_[k][c];
                for (int j = 1; j <= k - c + 1; ++j) {
                    const int rest_k = k - j;
                    if (c - 1 > rest_k) continue;
                    const ExactInt ways = binomial(k - 1, j - 1);
                    const auto& rest_row = g_[rest_k][c - 1];
                    for (std::uint64_t e1 = 0; e1 <= max_edges(j); ++e1) {
                        const ExactInt& conn = gprime_[j][e1];
                        if (conn == 0) continue;
                        const ExactInt w = ways * conn;
                        for (std::uint64_t e2 = 0; e2 < rest_row.size(); ++e2) {
                            if (rest_row[e2] != 0) row[e1 + e2] += w * rest_row[e2];
                        }
                    }
                }
            }
        }
    }

    int k_max_;
    std::vector<std::vector<ExactInt>> gprime_;             // [k][e]
    std::vector<std::vector<std::vector<ExactInt>>> g_;     // [k][c][e]
};

/// sum_e (-1)^e g'(e, k), read off the table.
inline ExactInt alt_sum_connected(const GraphCountTable& table, int k) {
    ExactInt sum = 0;
    for (std::uint64_t e = 0; e <= GraphCountTable::max_edges(k); ++e) {
        const auto v = table.gprime(static_cast<std::int64_t>(e), k);
        if (e % 2 == 0) sum += v; else sum -= v;
    }
    return sum;
}

/// sum_e sum_c (-1)^e n^c g(c, e, k), read off the table.
inline ExactInt alt_sum_all(const GraphCountTable& table, int k, const ExactInt& n) {
    if (n < 1) throw UsageError("alt_sum_all: n must be >= 1, got " + n.str());
    ExactInt sum = 0;
    ExactInt n_pow = 1;
    for (int c = 1; c <= k; ++c) {
        n_pow *= n;
        for (std::uint64_t e = 0; e <= GraphCountTable::max_edges(k); ++e) {
            const auto v = n_pow * table.g(c, static_cast<std::int64_t>(e), k);
            if (e % 2 == 0) sum += v; else sum -= v;
        }
    }
    return sum;
}

}  // namespace distinct_congruence
