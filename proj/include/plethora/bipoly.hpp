#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "plethora/rational.hpp"

namespace plethora {

/// Exponent pair of u^a v^b.
struct Monomial {
    unsigned a = 0;
    unsigned b = 0;

    unsigned degree() const { return a + b; }

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend Monomial operator*(const Monomial &x, const Monomial &y) { return {x.a + y.a, x.b + y.b}; }
};

/// Canonical term order: total degree ascending, then the u-heavier monomial first.
struct MonomialOrder {
    bool operator()(const Monomial &x, const Monomial &y) const
    {
        if (x.degree() != y.degree()) {
            return x.degree() < y.degree();
        }
        return x.a > y.a;
    }
};

/// Exact polynomial in u and v with rational coefficients. Zero coefficients
/// are never stored, so structural equality is mathematical equality.
class BiPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    BiPoly() = default;
    BiPoly(const Rational &c);
    BiPoly(int c) : BiPoly(Rational(c)) {}
    BiPoly(const Rational &c, Monomial m);

    static BiPoly u() { return BiPoly(Rational(1), {1, 0}); }
    static BiPoly v() { return BiPoly(Rational(1), {0, 1}); }
    static BiPoly monomial(unsigned a, unsigned b, const Rational &c = Rational(1)) { return BiPoly(c, {a, b}); }

    /// Parses expressions such as "1 + u*v", "-1/2*u^2*v", "(u+v)^2".
    static BiPoly parse(std::string_view text);

    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(Monomial m) const;
    Rational constant_term() const { return coeff({0, 0}); }
    bool is_constant() const;

    /// Highest total degree; 0 for the zero polynomial.
    unsigned degree() const;
    unsigned max_u_exponent() const;
    unsigned max_v_exponent() const;
    bool has_integer_coefficients() const;

    BiPoly &operator+=(const BiPoly &o);
    BiPoly &operator-=(const BiPoly &o);
    BiPoly &operator*=(const BiPoly &o);
    BiPoly &operator*=(const Rational &c);

    friend BiPoly operator+(BiPoly a, const BiPoly &b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly &b) { return a -= b; }
    friend BiPoly operator*(const BiPoly &a, const BiPoly &b);
    friend BiPoly operator*(BiPoly a, const Rational &c) { return a *= c; }
    friend BiPoly operator*(const Rational &c, BiPoly a) { return a *= c; }
    BiPoly operator-() const;

    friend bool operator==(const BiPoly &, const BiPoly &) = default;

    BiPoly pow(unsigned k) const;

    /// Replaces every u^a v^b by u^{am} v^{bm}.
    BiPoly substitute_powers(unsigned m) const;
    /// Exchanges u and v.
    BiPoly swap_uv() const;
    /// f(-u, -v).
    BiPoly negate_variables() const;

    Rational evaluate(const Rational &u, const Rational &v) const;

    std::string to_string() const;
    friend std::ostream &operator<<(std::ostream &os, const BiPoly &p) { return os << p.to_string(); }

private:
    void add_term(Monomial m, const Rational &c);

    TermMap terms_;
};

/// Free-function form of substitute_powers; m must be positive.
BiPoly substitute_powers(const BiPoly &f, unsigned m);

} // namespace plethora
