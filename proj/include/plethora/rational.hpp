#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace plethora {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(value) {}
    Rational(const BigInt &value) : value_(value) {}
    Rational(const BigInt &num, const BigInt &den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
    Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
    Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

    const mpq_class &raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    mpq_class value_{0};
};

/// n! as a big integer.
BigInt factorial(unsigned n);

/// Generalized binomial coefficient binom(top, k) for any integer top, k >= 0.
Rational binomial(long top, unsigned k);

} // namespace plethora
