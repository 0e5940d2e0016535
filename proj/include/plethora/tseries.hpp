#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "plethora/bipoly.hpp"

namespace plethora {

/// Power series in t with BiPoly coefficients, truncated after t^order.
/// Binary operations require both operands to carry the same order.
class TSeries {
public:
    explicit TSeries(unsigned order);
    TSeries(unsigned order, std::vector<BiPoly> coeffs);

    /// c * t^power, truncated at order (zero if power > order).
    static TSeries monomial(unsigned order, const BiPoly &c, unsigned power);
    static TSeries one(unsigned order) { return monomial(order, BiPoly(1), 0); }

    unsigned order() const { return order_; }
    const std::vector<BiPoly> &coeffs() const { return coeffs_; }
    const BiPoly &operator[](unsigned k) const { return coeffs_.at(k); }
    bool is_zero() const;

    /// Lowest k with a nonzero coefficient, or order+1 for the zero series.
    unsigned valuation() const;

    TSeries &operator+=(const TSeries &o);
    TSeries &operator-=(const TSeries &o);
    TSeries &operator*=(const Rational &c);

    friend TSeries operator+(TSeries a, const TSeries &b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries &b) { return a -= b; }
    friend TSeries operator*(const TSeries &a, const TSeries &b);
    friend TSeries operator*(TSeries a, const Rational &c) { return a *= c; }
    friend TSeries operator*(const Rational &c, TSeries a) { return a *= c; }
    TSeries operator-() const;

    friend bool operator==(const TSeries &, const TSeries &) = default;

    TSeries pow(unsigned k) const;
    /// Keeps coefficients up to t^new_order (new_order <= order).
    TSeries truncate(unsigned new_order) const;
    /// Substitutes u -> u^m, v -> v^m, t -> t^m.
    TSeries substitute_powers(unsigned m) const;
    /// Substitutes t -> -t.
    TSeries negate_t() const;
    /// Multiplies every coefficient by the polynomial p.
    TSeries scale(const BiPoly &p) const;

    /// Lines of the form "t^k: <poly>" for k = 0..order.
    std::string to_string() const;
    friend std::ostream &operator<<(std::ostream &os, const TSeries &s) { return os << s.to_string(); }

private:
    unsigned order_;
    std::vector<BiPoly> coeffs_;
};

/// exp(s); the t^0 coefficient of s must vanish.
TSeries series_exp(const TSeries &s);

/// log(s); the t^0 coefficient of s must equal 1.
TSeries series_log(const TSeries &s);

/// One factor (1 - monomial * t^t_power)^exponent of a product expansion.
/// The monomial is a single term and may carry a coefficient, so
/// (1 + u t) is written with monomial -u.
struct PowerFactor {
    BiPoly monomial;
    unsigned t_power = 1;
    long exponent = 1;
};

/// Exact expansion of the product of factors, truncated after t^order.
TSeries expand_product_of_powers(std::span<const PowerFactor> factors, unsigned order);

} // namespace plethora
