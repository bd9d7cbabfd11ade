#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace distinct_congruence {

/// Truncated power series in one formal variable with exact rational
/// coefficients. Coefficient m multiplies the m-th power; every series
/// carries its truncation order and stores exactly order + 1 coefficients.
class SeriesPoly {
public:
    explicit SeriesPoly(std::size_t order = 0) : coeffs_(order + 1) {}

    SeriesPoly(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1);
    }

    static SeriesPoly constant(const Rational& c, std::size_t order) {
        SeriesPoly s(order);
        s.coeffs_[0] = c;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    const Rational& operator[](std::size_t m) const { return coeffs_[m]; }
    Rational& operator[](std::size_t m) { return coeffs_[m]; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
    }

    SeriesPoly truncated(std::size_t order) const { return SeriesPoly(coeffs_, order); }

    SeriesPoly& operator+=(const SeriesPoly& o) {
        for (std::size_t m = 0; m <= std::min(order(), o.order()); ++m) coeffs_[m] += o.coeffs_[m];
        return *this;
    }
    SeriesPoly& operator-=(const SeriesPoly& o) {
        for (std::size_t m = 0; m <= std::min(order(), o.order()); ++m) coeffs_[m] -= o.coeffs_[m];
        return *this;
    }
    SeriesPoly& operator*=(const Rational& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    // Cauchy product, truncated to the smaller of the two orders.
    friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
        const std::size_t ord = std::min(a.order(), b.order());
        SeriesPoly out(ord);
        for (std::size_t i = 0; i <= ord; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= ord; ++j) {
                if (b.coeffs_[j] != 0) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }
    friend SeriesPoly operator+(SeriesPoly a, const SeriesPoly& b) { return a += b; }
    friend SeriesPoly operator-(SeriesPoly a, const SeriesPoly& b) { return a -= b; }
    friend SeriesPoly operator*(SeriesPoly a, const Rational& c) { return a *= c; }

    friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Bivariate truncated series in (y, z), stored y-outer: coefficient j is
/// a SeriesPoly in z that multiplies y^j.
class BivariateSeries {
public:
    BivariateSeries(std::size_t y_order, std::size_t z_order)
        : z_order_(z_order), rows_(y_order + 1, SeriesPoly(z_order)) {}

    std::size_t y_order() const { return rows_.size() - 1; }
    std::size_t z_order() const { return z_order_; }

    const SeriesPoly& operator[](std::size_t y_power) const { return rows_[y_power]; }
    SeriesPoly& operator[](std::size_t y_power) { return rows_[y_power]; }

    // Coefficient of y^e z^k.
    const Rational& at(std::size_t e, std::size_t k) const { return rows_[e][k]; }
    Rational& at(std::size_t e, std::size_t k) { return rows_[e][k]; }

    BivariateSeries& operator+=(const BivariateSeries& o) {
        for (std::size_t j = 0; j < rows_.size(); ++j) rows_[j] += o.rows_[j];
        return *this;
    }
    BivariateSeries& operator-=(const BivariateSeries& o) {
        for (std::size_t j = 0; j < rows_.size(); ++j) rows_[j] -= o.rows_[j];
        return *this;
    }
    BivariateSeries& operator*=(const Rational& c) {
        for (auto& r : rows_) r *= c;
        return *this;
    }

    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
        BivariateSeries out(a.y_order(), a.z_order());
        for (std::size_t i = 0; i <= a.y_order(); ++i) {
            if (a.rows_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= a.y_order(); ++j) {
                if (!b.rows_[j].is_zero()) out.rows_[i + j] += a.rows_[i] * b.rows_[j];
            }
        }
        return out;
    }
    friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
    friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
    friend BivariateSeries operator*(BivariateSeries a, const Rational& c) { return a *= c; }

    friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

private:
    std::size_t z_order_;
    std::vector<SeriesPoly> rows_;
};

namespace detail {

inline SeriesPoly one_like(const SeriesPoly& s) { return SeriesPoly::constant(1, s.order()); }

inline BivariateSeries one_like(const BivariateSeries& s) {
    BivariateSeries one(s.y_order(), s.z_order());
    one.at(0, 0) = 1;
    return one;
}

// log(1 + u) = sum_{j>=1} (-1)^(j+1) u^j / j. The caller guarantees u^j
// vanishes under truncation once j exceeds `terms`.
template <class S>
S log_one_plus(const S& u, std::size_t terms) {
    S result = u * Rational(0);
    S power = one_like(u);
    for (std::size_t j = 1; j <= terms; ++j) {
        power = power * u;
        Rational c(1, static_cast<long long>(j));
        if (j % 2 == 0) c = -c;
        result += power * c;
    }
    return result;
}

template <class S>
S pow_by_squaring(S base, std::uint64_t exponent) {
    S result = one_like(base);
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

inline Rational rational_pow(const Rational& base, std::uint64_t exponent) {
    if (exponent == 0) return 1;
    if (base == 0) return 0;
    if (exponent > std::numeric_limits<unsigned>::max()) {
        throw ResourceError("exponent " + std::to_string(exponent) + " too large");
    }
    auto e = static_cast<unsigned>(exponent);
    return Rational(boost::multiprecision::pow(numerator(base), e),
                    boost::multiprecision::pow(denominator(base), e));
}

inline std::uint64_t choose2(std::uint64_t m) { return m * (m == 0 ? 0 : m - 1) / 2; }

}  // namespace detail

/// Truncated logarithm; the constant term of p must be exactly 1.
inline SeriesPoly series_log(const SeriesPoly& p, std::size_t order) {
    if (p[0] != 1) throw DomainError("series_log: constant term must be 1, got " + p[0].str());
    SeriesPoly u = p.truncated(order);
    u[0] = 0;
    return detail::log_one_plus(u, order);
}

inline SeriesPoly series_pow(const SeriesPoly& p, std::uint64_t exponent, std::size_t order) {
    return detail::pow_by_squaring(p.truncated(order), exponent);
}

/// Truncated logarithm of a bivariate series with coefficient 1 at y^0 z^0.
inline BivariateSeries series_log(const BivariateSeries& p) {
    if (p.at(0, 0) != 1) {
        throw DomainError("series_log: constant term must be 1, got " + p.at(0, 0).str());
    }
    BivariateSeries u = p;
    u.at(0, 0) = 0;
    // Every monomial of u has total degree >= 1.
    return detail::log_one_plus(u, p.y_order() + p.z_order());
}

inline BivariateSeries series_pow(const BivariateSeries& p, std::uint64_t exponent) {
    return detail::pow_by_squaring(p, exponent);
}

/// F(alpha, beta) = sum_m alpha^m beta^C(m,2) / m!, as a series in alpha
/// through alpha^order.
inline SeriesPoly deformed_exp_truncated(const Rational& beta, std::size_t order) {
    SeriesPoly f(order);
    for (std::size_t m = 0; m <= order; ++m) {
        f[m] = detail::rational_pow(beta, detail::choose2(m)) / Rational(factorial(m));
    }
    return f;
}

/// F(z, 1 + y) through z^z_order, expanded in y. The y-degree of the
/// z^m coefficient is C(m,2), so y_order defaults to C(z_order, 2).
inline BivariateSeries deformed_exp_shifted(std::size_t z_order) {
    const std::size_t y_order = detail::choose2(z_order);
    BivariateSeries f(y_order, z_order);
    for (std::size_t m = 0; m <= z_order; ++m) {
        const Rational inv_fact(ExactInt(1), factorial(m));
        const std::uint64_t top = detail::choose2(m);
        for (std::uint64_t e = 0; e <= top; ++e) {
            f.at(e, m) = Rational(binomial(top, e)) * inv_fact;
        }
    }
    return f;
}

/// m-th term of the three-variable Rogers-Ramanujan series:
/// alpha^m beta^C(m,2) / prod_{j=2}^{m} (1 + q + ... + q^(j-1)).
inline Rational rr_series_term(std::uint64_t m, const Rational& alpha, const Rational& beta,
                               const Rational& q) {
    Rational denom = 1;
    Rational partial = 1;  // 1 + q + ... + q^(j-1)
    Rational q_power = 1;
    for (std::uint64_t j = 2; j <= m; ++j) {
        q_power *= q;
        partial += q_power;
        denom *= partial;
    }
    if (denom == 0) {
        throw DomainError("rr_series_term: q-factorial denominator vanishes for m = " +
                          std::to_string(m) + ", q = " + q.str());
    }
    return detail::rational_pow(alpha, m) * detail::rational_pow(beta, detail::choose2(m)) / denom;
}

/// "p/q" with an explicit denominator, also for integers.
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace distinct_congruence
