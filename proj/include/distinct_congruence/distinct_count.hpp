#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "congruence.hpp"
#include "oracle.hpp"

namespace distinct_congruence {

enum class Method { formula, iep_edges, iep_partitions, brute };

inline constexpr Method kAllMethods[] = {Method::formula, Method::iep_edges,
                                         Method::iep_partitions, Method::brute};

inline std::string_view method_name(Method m) {
    switch (m) {
        case Method::formula: return "formula";
        case Method::iep_edges: return "iep-edges";
        case Method::iep_partitions: return "iep-partitions";
        case Method::brute: return "brute";
    }
    return "?";
}

inline std::optional<Method> parse_method(std::string_view name) {
    for (auto m : kAllMethods) {
        if (method_name(m) == name) return m;
    }
    return std::nullopt;
}

/// Counts distinct-coordinate solutions with the requested method. All
/// methods agree wherever their preconditions hold.
inline ExactCount distinct_count(const CongruenceInstance& inst, Method method,
                                 const OracleOptions& options = {}) {
    switch (method) {
        case Method::formula: return distinct_count_formula(inst);
        case Method::iep_edges: return iep_edge_subsets(inst);
        case Method::iep_partitions: return iep_partitions(inst);
        case Method::brute: return brute_force_distinct(inst, options);
    }
    throw UsageError("unknown method");
}

}  // namespace distinct_congruence
