#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace distinct_congruence {

// Expression templates are off so that `auto` always binds a value.
using ExactInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                               boost::multiprecision::et_off>;
// Counts are ExactInt values that are never negative.
using ExactCount = ExactInt;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

struct PrimePower {
    ExactInt prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Strictly increasing primes; empty for n = 1.
using Factorization = std::vector<PrimePower>;

inline bool fits_int64(const ExactInt& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const ExactInt& v) {
    if (!fits_int64(v)) {
        throw ResourceError("integer " + v.str() + " does not fit in 64 bits");
    }
    return v.convert_to<std::int64_t>();
}

// Least non-negative residue of v modulo n (n >= 1).
inline ExactInt mod_floor(const ExactInt& v, const ExactInt& n) {
    ExactInt r = v % n;
    if (r < 0) r += n;
    return r;
}

// gcd of absolute values; gcd(0, ..., 0) = 0.
inline ExactInt gcd_many(std::span<const ExactInt> values) {
    if (values.empty()) throw UsageError("gcd_many: empty list");
    ExactInt g = 0;
    for (const auto& v : values) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v));
    }
    return g;
}

inline ExactInt gcd_many(std::initializer_list<ExactInt> values) {
    return gcd_many(std::span<const ExactInt>(values.begin(), values.size()));
}

namespace detail {

inline Factorization factorize_u64(std::uint64_t n) {
    Factorization out;
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({ExactInt(p), e});
    };
    take(2);
    for (std::uint64_t p = 3; p <= n / p; p += 2) take(p);
    if (n > 1) out.push_back({ExactInt(n), 1});
    return out;
}

}  // namespace detail

// Trial division. Meant for desk-scale n.
inline Factorization factorize(const ExactInt& n) {
    if (n <= 0) throw DomainError("factorize: n must be >= 1, got " + n.str());
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        return detail::factorize_u64(n.convert_to<std::uint64_t>());
    }
    Factorization out;
    ExactInt m = n;
    for (ExactInt p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

inline bool is_prime(const ExactInt& n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f.front().exponent == 1;
}

inline ExactCount euler_phi(const ExactInt& n) {
    if (n <= 0) throw DomainError("euler_phi: n must be >= 1, got " + n.str());
    ExactInt phi = n;
    for (const auto& [p, e] : factorize(n)) {
        phi = phi / p * (p - 1);
    }
    return phi;
}

inline ExactCount factorial(std::uint64_t m) {
    ExactInt r = 1;
    for (std::uint64_t i = 2; i <= m; ++i) r *= i;
    return r;
}

// (n-1)(n-2)...(n-k+1). The product is empty (= 1) for k = 1 and is
// returned with its sign when some factor is non-positive.
inline ExactInt falling_factorial(const ExactInt& n, std::int64_t k) {
    if (k <= 0) throw UsageError("falling_factorial: k must be >= 1, got " + std::to_string(k));
    ExactInt r = 1;
    for (std::int64_t i = 1; i < k; ++i) r *= (n - i);
    return r;
}

inline ExactCount binomial(const ExactInt& n, const ExactInt& k) {
    if (n < 0 || k < 0) {
        throw DomainError("binomial: arguments must be non-negative, got (" + n.str() + ", " +
                          k.str() + ")");
    }
    if (k > n) return 0;
    ExactInt kk = (k > n - k) ? ExactInt(n - k) : k;
    if (kk > std::numeric_limits<std::uint32_t>::max()) {
        throw ResourceError("binomial: lower index " + kk.str() + " too large");
    }
    auto steps = kk.convert_to<std::uint64_t>();
    ExactInt r = 1;
    for (std::uint64_t i = 1; i <= steps; ++i) {
        r = r * (n - steps + i) / i;
    }
    return r;
}

inline ExactCount binomial(std::uint64_t n, std::uint64_t k) {
    return binomial(ExactInt(n), ExactInt(k));
}

// Sign (-1)^m as an ExactInt.
inline ExactInt sign_pow(std::int64_t m) { return (m % 2 == 0) ? ExactInt(1) : ExactInt(-1); }

}  // namespace distinct_congruence
