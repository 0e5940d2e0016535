#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>

#include "plethora/bipoly.hpp"
#include "plethora/hodge.hpp"

namespace plethora {

/// Polynomial in u, v and the grading variable z, stored by z-degree.
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(const BiPoly &p, unsigned grade);
    ZPoly(const GradedPoly &g) : ZPoly(g.poly, g.grade) {}

    const std::map<unsigned, BiPoly> &by_grade() const { return grades_; }

    ZPoly &operator+=(const ZPoly &o);
    friend ZPoly operator+(ZPoly a, const ZPoly &b) { return a += b; }
    friend ZPoly operator*(const ZPoly &a, const ZPoly &b);
    friend ZPoly operator*(ZPoly a, const Rational &c);

    friend bool operator==(const ZPoly &, const ZPoly &) = default;

    std::string to_string() const;
    friend std::ostream &operator<<(std::ostream &os, const ZPoly &p) { return os << p.to_string(); }

private:
    std::map<unsigned, BiPoly> grades_;
};

/// Exponents of A^alpha B^beta C^gamma.
struct ABCExponent {
    unsigned alpha = 0;
    unsigned beta = 0;
    unsigned gamma = 0;

    unsigned z_degree() const { return alpha + beta + 2 * gamma; }
    friend bool operator==(const ABCExponent &, const ABCExponent &) = default;
};

/// z-degree ascending, then higher powers of A, then of B.
struct ABCOrder {
    bool operator()(const ABCExponent &x, const ABCExponent &y) const;
};

/// Polynomial in A = (1+uv)z, B = (u+v)z, C = uv z^2 with rational coefficients.
class ABCPoly {
public:
    using TermMap = std::map<ABCExponent, Rational, ABCOrder>;

    ABCPoly() = default;
    ABCPoly(const Rational &c);
    ABCPoly(int c) : ABCPoly(Rational(c)) {}
    ABCPoly(ABCExponent e, const Rational &c = Rational(1));

    static ABCPoly A() { return ABCPoly(ABCExponent{1, 0, 0}); }
    static ABCPoly B() { return ABCPoly(ABCExponent{0, 1, 0}); }
    static ABCPoly C() { return ABCPoly(ABCExponent{0, 0, 1}); }

    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(ABCExponent e) const;

    ABCPoly &operator+=(const ABCPoly &o);
    ABCPoly &operator-=(const ABCPoly &o);
    friend ABCPoly operator+(ABCPoly a, const ABCPoly &b) { return a += b; }
    friend ABCPoly operator-(ABCPoly a, const ABCPoly &b) { return a -= b; }
    friend ABCPoly operator*(const ABCPoly &a, const ABCPoly &b);
    friend ABCPoly operator*(ABCPoly a, const Rational &c);

    friend bool operator==(const ABCPoly &, const ABCPoly &) = default;

    ABCPoly pow(unsigned k) const;

    /// Substitutes A, B, C by their (u, v, z) expressions.
    ZPoly expand() const;

    /// e.g. "A^2 - C".
    std::string to_string() const;
    friend std::ostream &operator<<(std::ostream &os, const ABCPoly &p) { return os << p.to_string(); }

private:
    void add_term(ABCExponent e, const Rational &c);

    TermMap terms_;
};

enum class ABCSequence {
    A, ///< A_s, expanding to (u^s + v^s) z^s
    T, ///< T_s, expanding to (1 + u^s v^s) z^s
};

/// A_0 = 2, A_1 = B, A_s = B A_{s-1} - C A_{s-2}; likewise T with A in place of B.
ABCPoly abc_sequence(unsigned s, ABCSequence which);

/// A_{p-q} C^{min(q, n-p)} T_{|n-p-q|}, the A/B/C form of r_generator(p, q, n).
ABCPoly r_generator_abc(unsigned p, unsigned q, unsigned n);

/// Writes HD(X) z^n as a polynomial in A, B, C. The diamond must satisfy
/// Hodge symmetry and Serre duality.
ABCPoly abc_decompose(const HodgeDiamond &d);

/// Drops every term containing C.
ABCPoly birational_reduce(const ABCPoly &f);

} // namespace plethora
