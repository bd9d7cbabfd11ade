#pragma once

// Test-only ground truth. Nothing here calls into the library's counting
// code; everything is plain enumeration over machine integers.

#include <cstdint>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

namespace brute {

// Calls f(tuple) for every tuple in [0, n)^k.
template <class F>
void for_each_tuple(int n, int k, F&& f) {
    std::vector<int> x(k, 0);
    if (n <= 0) return;
    while (true) {
        f(static_cast<const std::vector<int>&>(x));
        int i = k - 1;
        while (i >= 0 && x[i] == n - 1) x[i--] = 0;
        if (i < 0) return;
        ++x[i];
    }
}

inline bool satisfies(const std::vector<int>& a, const std::vector<int>& x, int b, int n) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * x[i];
    return ((s - b) % n + n) % n == 0;
}

inline long long all_solutions(const std::vector<int>& a, int b, int n) {
    long long c = 0;
    for_each_tuple(n, static_cast<int>(a.size()), [&](const std::vector<int>& x) {
        if (satisfies(a, x, b, n)) ++c;
    });
    return c;
}

inline long long distinct_solutions(const std::vector<int>& a, int b, int n) {
    long long c = 0;
    for_each_tuple(n, static_cast<int>(a.size()), [&](const std::vector<int>& x) {
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j)
                if (x[i] == x[j]) return;
        if (satisfies(a, x, b, n)) ++c;
    });
    return c;
}

// x_1 + ... + x_k = b (mod n) with every gcd(x_i, n) = 1.
inline long long unit_solutions(int k, int b, int n) {
    long long c = 0;
    std::vector<int> ones(k, 1);
    for_each_tuple(n, k, [&](const std::vector<int>& x) {
        for (int v : x)
            if (std::gcd(v, n) != 1) return;
        if (satisfies(ones, x, b, n)) ++c;
    });
    return c;
}

inline long long phi(int n) {
    long long c = 0;
    for (int x = 1; x <= n; ++x)
        if (std::gcd(x, n) == 1) ++c;
    return c;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct GraphCensus {
    std::map<std::pair<int, int>, long long> connected;  // (e, k) -> count
    std::map<std::tuple<int, int, int>, long long> by_components;  // (c, e, k) -> count
};

inline int components(int k, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(k);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(k, 0);
    int comps = 0;
    for (int s = 0; s < k; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
    }
    return comps;
}

// Enumerates all 2^C(k,2) edge subsets on k labeled vertices.
inline GraphCensus census(int k_max) {
    GraphCensus out;
    for (int k = 1; k <= k_max; ++k) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) pairs.emplace_back(u, v);
        const std::uint32_t total = 1U << pairs.size();
        for (std::uint32_t mask = 0; mask < total; ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask & (1U << i)) edges.push_back(pairs[i]);
            const int c = components(k, edges);
            const int e = static_cast<int>(edges.size());
            ++out.by_components[{c, e, k}];
            if (c == 1) ++out.connected[{e, k}];
        }
    }
    return out;
}

}  // namespace brute
