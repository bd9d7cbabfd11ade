#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace distinct_congruence {

inline constexpr std::size_t kDefaultSubsetKCap = 24;

/// a_1 x_1 + ... + a_k x_k = b (mod n), k >= 1, n >= 1.
/// Coefficients and b are stored reduced into [0, n).
class CongruenceInstance {
public:
    CongruenceInstance(std::vector<ExactInt> coeffs, ExactInt b, ExactInt n)
        : coeffs_(std::move(coeffs)), b_(std::move(b)), n_(std::move(n)) {
        if (coeffs_.empty()) throw UsageError("congruence needs at least one coefficient");
        if (n_ < 1) throw DomainError("modulus n must be >= 1, got " + n_.str());
        for (auto& a : coeffs_) a = mod_floor(a, n_);
        b_ = mod_floor(b_, n_);
    }

    std::size_t k() const { return coeffs_.size(); }
    const std::vector<ExactInt>& coeffs() const { return coeffs_; }
    const ExactInt& coeff(std::size_t i) const { return coeffs_[i]; }
    const ExactInt& b() const { return b_; }
    const ExactInt& n() const { return n_; }

    CongruenceInstance with_b(const ExactInt& b) const { return {coeffs_, b, n_}; }

    ExactInt coeff_sum() const {
        ExactInt s = 0;
        for (const auto& a : coeffs_) s += a;
        return s;
    }

    friend bool operator==(const CongruenceInstance&, const CongruenceInstance&) = default;

private:
    std::vector<ExactInt> coeffs_;
    ExactInt b_;
    ExactInt n_;
};

/// Outcome of testing gcd(sum_{i in I} a_i, n) = 1 over every nonempty
/// proper subset I.
struct ConditionReport {
    bool holds = true;
    // 0-based indices, ascending. Present iff !holds.
    std::optional<std::vector<std::size_t>> failing_subset;
    ExactCount full_sum_gcd = 0;  // gcd(a_1 + ... + a_k, n)
    bool divides_b = false;       // full_sum_gcd | b

    friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

/// Raised by the closed-form counters when their hypothesis fails.
class HypothesisError : public PreconditionError {
public:
    HypothesisError(const std::string& what, ConditionReport report)
        : PreconditionError(what), report_(std::move(report)) {}
    const ConditionReport& report() const { return report_; }

private:
    ConditionReport report_;
};

/// Lehmer: l = gcd(a_1, ..., a_k, n); l * n^(k-1) solutions when l | b, else 0.
inline ExactCount lehmer_count(const CongruenceInstance& inst) {
    ExactInt l = inst.n();
    for (const auto& a : inst.coeffs()) l = boost::multiprecision::gcd(l, a);
    if (inst.b() % l != 0) return 0;
    return l * boost::multiprecision::pow(inst.n(), static_cast<unsigned>(inst.k() - 1));
}

namespace detail {

// Visits the nonempty proper subsets of {0..k-1} ordered by size, then
// lexicographically; stops at the first one whose sum is not a unit mod n.
template <class Int>
std::optional<std::vector<std::size_t>> first_non_unit_subset(const std::vector<Int>& a, Int n) {
    const std::size_t k = a.size();
    std::vector<std::size_t> idx;
    for (std::size_t size = 1; size < k; ++size) {
        idx.resize(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            Int s = 0;
            for (auto i : idx) {
                s += a[i];
                if (s >= n) s -= n;
            }
            if (std::gcd(s, n) != 1) return idx;
            // next combination
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == k - size + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

inline std::optional<std::vector<std::size_t>> first_non_unit_subset(
    const std::vector<ExactInt>& a, const ExactInt& n) {
    const std::size_t k = a.size();
    std::vector<std::size_t> idx;
    for (std::size_t size = 1; size < k; ++size) {
        idx.resize(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            ExactInt s = 0;
            for (auto i : idx) s += a[i];
            if (boost::multiprecision::gcd(s, n) != 1) return idx;
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == k - size + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Tests the subset-sum gcd hypothesis of the distinct-solution formula.
/// The reported failing subset is the first in size-then-lex order.
inline ConditionReport check_condition(const CongruenceInstance& inst,
                                       std::size_t k_cap = kDefaultSubsetKCap) {
    if (inst.k() > k_cap) {
        throw ResourceError("check_condition: k = " + std::to_string(inst.k()) +
                            " exceeds subset enumeration cap " + std::to_string(k_cap));
    }
    ConditionReport report;
    report.full_sum_gcd = boost::multiprecision::gcd(inst.coeff_sum(), inst.n());
    report.divides_b = inst.b() % report.full_sum_gcd == 0;

    // Residues are < n, so each running sum stays below 2n.
    if (inst.n() <= (std::numeric_limits<std::uint64_t>::max() >> 1)) {
        std::vector<std::uint64_t> a;
        a.reserve(inst.k());
        for (const auto& c : inst.coeffs()) a.push_back(c.convert_to<std::uint64_t>());
        report.failing_subset =
            detail::first_non_unit_subset<std::uint64_t>(a, inst.n().convert_to<std::uint64_t>());
    } else {
        report.failing_subset = detail::first_non_unit_subset(inst.coeffs(), inst.n());
    }
    report.holds = !report.failing_subset.has_value();
    return report;
}

/// Number of solutions with pairwise distinct coordinates, by the closed
/// form. With l' = gcd(sum a_i, n) and P = (n-1)...(n-k+1):
///   l' does not divide b:  (-1)^k (k-1)! + P
///   l' divides b:          (-1)^(k-1) (k-1)! (l' - 1) + P
/// Only valid when every nonempty proper subset sum is a unit mod n.
inline ExactCount distinct_count_formula(const CongruenceInstance& inst,
                                         std::size_t k_cap = kDefaultSubsetKCap) {
    auto report = check_condition(inst, k_cap);
    if (!report.holds) {
        throw HypothesisError("subset-sum gcd hypothesis fails; the closed form does not apply",
                              std::move(report));
    }
    const auto k = static_cast<std::int64_t>(inst.k());
    const ExactInt falling = falling_factorial(inst.n(), k);
    const ExactInt fact = factorial(static_cast<std::uint64_t>(k - 1));
    ExactInt count = report.divides_b
                         ? sign_pow(k - 1) * fact * (report.full_sum_gcd - 1) + falling
                         : sign_pow(k) * fact + falling;
    if (count < 0) {
        throw std::logic_error("distinct_count_formula produced a negative count " + count.str());
    }
    return count;
}

/// Schoenemann's count for prime p, b = 0, sum a_i = 0 (mod p) and no
/// vanishing proper subset sum:
///   (-1)^(k-1) (k-1)! (p-1) + (p-1)...(p-k+1).
/// Computed through distinct_count_formula and checked against this form.
inline ExactCount schoenemann_count(const ExactInt& p, std::vector<ExactInt> coeffs) {
    if (!is_prime(p)) throw PreconditionError("schoenemann_count: p = " + p.str() + " is not prime");
    CongruenceInstance inst(std::move(coeffs), 0, p);
    if (inst.coeff_sum() % p != 0) {
        throw PreconditionError("schoenemann_count: coefficient sum is not 0 mod " + p.str());
    }
    ExactCount via_general = distinct_count_formula(inst);
    const auto k = static_cast<std::int64_t>(inst.k());
    const ExactInt closed = sign_pow(k - 1) * factorial(static_cast<std::uint64_t>(k - 1)) * (p - 1) +
                            falling_factorial(p, k);
    if (closed != via_general) {
        throw std::logic_error("schoenemann_count: general formula gives " + via_general.str() +
                               ", closed form gives " + closed.str());
    }
    return via_general;
}

/// Rademacher-Brauer: solutions of x_1 + ... + x_k = b (mod n) with every
/// gcd(x_i, n) = 1,
///   phi(n)^k / n * prod_{p | n, p | b} (1 - (-1)^(k-1) / (p-1)^(k-1))
///                * prod_{p | n, p !| b} (1 - (-1)^k / (p-1)^k).
/// For n = 1 both products are empty and the count is 1.
inline ExactCount rademacher_brauer_count(const ExactInt& n, std::int64_t k, const ExactInt& b) {
    if (n < 1) throw DomainError("rademacher_brauer_count: n must be >= 1, got " + n.str());
    if (k < 1) throw UsageError("rademacher_brauer_count: k must be >= 1, got " + std::to_string(k));
    const auto uk = static_cast<unsigned>(k);
    Rational value(boost::multiprecision::pow(euler_phi(n), uk), n);
    const ExactInt b_red = mod_floor(b, n);
    for (const auto& [p, e] : factorize(n)) {
        const unsigned exp = (b_red % p == 0) ? uk - 1 : uk;
        const Rational term = Rational(sign_pow(exp), boost::multiprecision::pow(ExactInt(p - 1), exp));
        value *= Rational(1) - term;
    }
    if (denominator(value) != 1 || value < 0) {
        throw std::logic_error("rademacher_brauer_count: value " + value.str() +
                               " is not a non-negative integer");
    }
    return numerator(value);
}

}  // namespace distinct_congruence
