#include "plethora/rational.hpp"

#include "plethora/error.hpp"

namespace plethora {

Rational::Rational(const BigInt &num, const BigInt &den)
{
    require(den != 0, "rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(s, 10));
        }
        return Rational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument &) {
        throw PreconditionError("malformed rational '" + s + "'");
    }
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o)
{
    require(!o.is_zero(), "division by zero");
    value_ /= o.value_;
    return *this;
}

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational binomial(long top, unsigned k)
{
    BigInt num = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= BigInt(top - static_cast<long>(i));
    }
    return Rational(num, factorial(k));
}

} // namespace plethora
