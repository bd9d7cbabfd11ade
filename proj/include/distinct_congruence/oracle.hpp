#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"

namespace distinct_congruence {

inline constexpr std::uint64_t kDefaultBruteBudget = 100'000'000;
inline constexpr std::size_t kMaxEdgeSubsetK = 5;
inline constexpr std::size_t kMaxPartitionK = 12;

struct OracleOptions {
    std::uint64_t brute_budget = kDefaultBruteBudget;  // cap on n^k
    unsigned threads = 1;
};

/// A set of index pairs {u, v} (0-based, u < v) whose coordinates are
/// forced equal.
struct EqualityPattern {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Disjoint nonempty blocks covering {0..k-1}. Canonical form: each block
/// ascending, blocks ordered by smallest element.
struct IndexPartition {
    std::vector<std::vector<std::size_t>> blocks;

    friend bool operator==(const IndexPartition&, const IndexPartition&) = default;
    friend auto operator<=>(const IndexPartition&, const IndexPartition&) = default;
};

class UnionFind {
public:
    explicit UnionFind(std::size_t size) : parent_(size) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

/// Connected components of the pattern graph on k vertices.
inline IndexPartition induced_partition(const EqualityPattern& pattern, std::size_t k) {
    UnionFind uf(k);
    for (auto [u, v] : pattern.edges) {
        if (u >= k || v >= k || u == v) {
            throw UsageError("equality pattern edge {" + std::to_string(u) + ", " +
                             std::to_string(v) + "} invalid for k = " + std::to_string(k));
        }
        uf.unite(u, v);
    }
    IndexPartition out;
    std::vector<std::size_t> block_of(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t root = uf.find(i);
        if (block_of[root] == k) {
            block_of[root] = out.blocks.size();
            out.blocks.emplace_back();
        }
        out.blocks[block_of[root]].push_back(i);
    }
    return out;
}

/// Congruence obtained by identifying the variables of each block; the
/// merged coefficient is the sum over the block.
inline CongruenceInstance merge_blocks(const CongruenceInstance& inst, const IndexPartition& p) {
    std::vector<ExactInt> merged;
    merged.reserve(p.blocks.size());
    for (const auto& block : p.blocks) {
        ExactInt s = 0;
        for (auto i : block) s += inst.coeff(i);
        merged.push_back(std::move(s));
    }
    return {std::move(merged), inst.b(), inst.n()};
}

/// N(S): solutions with x_u = x_v for every {u, v} in the pattern.
inline ExactCount pattern_count(const CongruenceInstance& inst, const EqualityPattern& pattern) {
    return lehmer_count(merge_blocks(inst, induced_partition(pattern, inst.k())));
}

/// prod over blocks of (-1)^(|B|-1) (|B|-1)!
inline ExactInt mobius_weight(const IndexPartition& p) {
    ExactInt w = 1;
    for (const auto& block : p.blocks) {
        const auto m = static_cast<std::int64_t>(block.size()) - 1;
        w *= sign_pow(m) * factorial(static_cast<std::uint64_t>(m));
    }
    return w;
}

/// Calls visit(partition) for every set partition of {0..k-1}, in
/// restricted-growth-string order.
template <class Visit>
void for_each_partition(std::size_t k, Visit&& visit) {
    if (k == 0) return;
    std::vector<std::size_t> rgs(k, 0);    // block label of each index
    std::vector<std::size_t> max_prefix(k, 0);  // max label among rgs[0..i-1]
    while (true) {
        IndexPartition p;
        for (std::size_t i = 0; i < k; ++i) {
            if (rgs[i] == p.blocks.size()) p.blocks.emplace_back();
            p.blocks[rgs[i]].push_back(i);
        }
        visit(static_cast<const IndexPartition&>(p));
        // advance
        std::size_t i = k - 1;
        while (i > 0 && rgs[i] > max_prefix[i]) --i;
        if (i == 0) return;
        ++rgs[i];
        for (std::size_t j = i + 1; j < k; ++j) {
            rgs[j] = 0;
            max_prefix[j] = std::max(max_prefix[j - 1], rgs[j - 1]);
        }
    }
}

namespace detail {

// Counts distinct-coordinate solutions with first coordinate in
// [first_lo, first_hi). Residues are < n < 2^32, so a * x + partial fits.
inline std::uint64_t brute_range(const std::vector<std::uint64_t>& a, std::uint64_t b,
                                 std::uint64_t n, std::uint64_t first_lo, std::uint64_t first_hi,
                                 std::uint64_t& visited) {
    const std::size_t k = a.size();
    std::vector<char> used(n, 0);
    std::vector<std::uint64_t> x(k, 0);
    std::vector<std::uint64_t> partial(k + 1, 0);  // partial[i] = sum_{j<i} a_j x_j mod n
    std::uint64_t count = 0;
    std::uint64_t evaluated = 0;

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == k) {
            ++evaluated;
            if (partial[k] == b) ++count;
            return;
        }
        const std::uint64_t lo = depth == 0 ? first_lo : 0;
        const std::uint64_t hi = depth == 0 ? first_hi : n;
        for (std::uint64_t v = lo; v < hi; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            x[depth] = v;
            partial[depth + 1] = (partial[depth] + a[depth] * v) % n;
            self(self, depth + 1);
            used[v] = 0;
        }
    };
    rec(rec, 0);
    visited += evaluated;
    return count;
}

}  // namespace detail

struct BruteForceStats {
    std::uint64_t tuples_evaluated = 0;
};

/// Exhaustive count over Z_n^k of pairwise-distinct tuples satisfying the
/// congruence. Refuses when n^k exceeds the budget.
inline ExactCount brute_force_distinct(const CongruenceInstance& inst,
                                       const OracleOptions& options = {},
                                       BruteForceStats* stats = nullptr) {
    if (stats) *stats = {};
    if (ExactInt(inst.k()) > inst.n()) return 0;
    const ExactInt space = boost::multiprecision::pow(inst.n(), static_cast<unsigned>(inst.k()));
    if (space > options.brute_budget) {
        throw ResourceError("brute force needs n^k = " + space.str() + " tuples, budget is " +
                            std::to_string(options.brute_budget));
    }
    if (inst.n() >= (ExactInt(1) << 32)) {
        throw ResourceError("brute force needs n < 2^32, got n = " + inst.n().str());
    }
    const auto n = inst.n().convert_to<std::uint64_t>();
    const auto b = inst.b().convert_to<std::uint64_t>();
    std::vector<std::uint64_t> a;
    for (const auto& c : inst.coeffs()) a.push_back(c.convert_to<std::uint64_t>());

    if (a.size() == 1) {
        std::uint64_t count = 0;
        for (std::uint64_t x = 0; x < n; ++x) {
            if ((a[0] * x) % n == b) ++count;
        }
        if (stats) stats->tuples_evaluated = n;
        return count;
    }

    const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(n)));
    if (workers == 1) {
        std::uint64_t visited = 0;
        const auto count = detail::brute_range(a, b, n, 0, n, visited);
        if (stats) stats->tuples_evaluated = visited;
        return count;
    }
    std::vector<std::future<std::pair<std::uint64_t, std::uint64_t>>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = n * w / workers;
        const std::uint64_t hi = n * (w + 1) / workers;
        jobs.push_back(std::async(std::launch::async, [&a, b, n, lo, hi] {
            std::uint64_t visited = 0;
            const auto c = detail::brute_range(a, b, n, lo, hi, visited);
            return std::pair{c, visited};
        }));
    }
    ExactCount total = 0;
    std::uint64_t visited = 0;
    for (auto& j : jobs) {
        auto [c, v] = j.get();
        total += c;
        visited += v;
    }
    if (stats) stats->tuples_evaluated = visited;
    return total;
}

/// Inclusion-exclusion over all subsets S of the C(k,2) index pairs:
/// sum_S (-1)^|S| N(S). Needs no hypothesis on the coefficients.
inline ExactCount iep_edge_subsets(const CongruenceInstance& inst) {
    const std::size_t k = inst.k();
    if (k > kMaxEdgeSubsetK) {
        throw ResourceError("iep-edges supports k <= " + std::to_string(kMaxEdgeSubsetK) +
                            ", got k = " + std::to_string(k) + "; use iep-partitions");
    }
    std::vector<std::pair<std::size_t, std::size_t>> all_pairs;
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v) all_pairs.emplace_back(u, v);

    ExactInt total = 0;
    const std::uint32_t subsets = 1U << all_pairs.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        EqualityPattern pattern;
        for (std::size_t i = 0; i < all_pairs.size(); ++i) {
            if (mask & (1U << i)) pattern.edges.push_back(all_pairs[i]);
        }
        const ExactCount n_s = pattern_count(inst, pattern);
        if (pattern.edges.size() % 2 == 0) total += n_s; else total -= n_s;
    }
    return total;
}

/// Edge subsets grouped by their component partition: each partition
/// contributes its Mobius weight times the merged Lehmer count.
inline ExactCount iep_partitions(const CongruenceInstance& inst) {
    if (inst.k() > kMaxPartitionK) {
        throw ResourceError("iep-partitions supports k <= " + std::to_string(kMaxPartitionK) +
                            ", got k = " + std::to_string(inst.k()));
    }
    ExactInt total = 0;
    for_each_partition(inst.k(), [&](const IndexPartition& p) {
        total += mobius_weight(p) * lehmer_count(merge_blocks(inst, p));
    });
    return total;
}

}  // namespace distinct_congruence
