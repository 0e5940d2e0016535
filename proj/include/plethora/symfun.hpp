#pragma once

#include <map>
#include <ostream>
#include <string>

#include "plethora/bipoly.hpp"
#include "plethora/partition.hpp"
#include "plethora/rational.hpp"

namespace plethora {

/// Symmetric function written in the power-sum basis: sum of c_lambda p_lambda.
/// The empty partition carries the constant term. Degrees may be mixed.
class SymFun {
public:
    using TermMap = std::map<Partition, Rational>;

    SymFun() = default;
    SymFun(const Rational &c);
    SymFun(int c) : SymFun(Rational(c)) {}
    SymFun(const Partition &lambda, const Rational &c = Rational(1));

    /// The power sum p_n (n >= 1).
    static SymFun p(unsigned n);

    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Partition &lambda) const;
    Rational constant_term() const { return coeff(Partition{}); }
    /// Largest |lambda| present; 0 for constants and zero.
    unsigned max_degree() const;
    /// The graded piece of degree d.
    SymFun homogeneous_part(unsigned d) const;

    SymFun &operator+=(const SymFun &o);
    SymFun &operator-=(const SymFun &o);
    SymFun &operator*=(const Rational &c);

    friend SymFun operator+(SymFun a, const SymFun &b) { return a += b; }
    friend SymFun operator-(SymFun a, const SymFun &b) { return a -= b; }
    friend SymFun operator*(const SymFun &a, const SymFun &b);
    friend SymFun operator*(SymFun a, const Rational &c) { return a *= c; }
    friend SymFun operator*(const Rational &c, SymFun a) { return a *= c; }
    SymFun operator-() const { return *this * Rational(-1); }

    friend bool operator==(const SymFun &, const SymFun &) = default;

    SymFun pow(unsigned k) const;

    /// e.g. "p1^3 - 3*p1*p2 + 2*p3".
    std::string to_string() const;
    friend std::ostream &operator<<(std::ostream &os, const SymFun &f) { return os << f.to_string(); }

private:
    void add_term(const Partition &lambda, const Rational &c);

    TermMap terms_;
};

/// Complete homogeneous h_n = sum_{lambda |- n} p_lambda / z_lambda.
SymFun h_to_p(unsigned n);

/// Elementary e_n = sum_{lambda |- n} (-1)^{n - l(lambda)} p_lambda / z_lambda.
SymFun e_to_p(unsigned n);

/// Schur function s_lambda via the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
SymFun s_to_p(const Partition &lambda);

/// Power sums of two variables, p_r = u^r + v^r, for evaluation of SymFun.
BiPoly evaluate_two_variables(const SymFun &f);

} // namespace plethora
