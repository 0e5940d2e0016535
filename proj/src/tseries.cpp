#include "plethora/tseries.hpp"

#include <sstream>

#include "plethora/error.hpp"

namespace plethora {

namespace {

void require_same_order(const TSeries &a, const TSeries &b)
{
    require(a.order() == b.order(), "series truncation orders differ (" + std::to_string(a.order()) + " vs " +
                                        std::to_string(b.order()) + "); truncate first");
}

} // namespace

TSeries::TSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

TSeries::TSeries(unsigned order, std::vector<BiPoly> coeffs) : order_(order), coeffs_(std::move(coeffs))
{
    require(coeffs_.size() == order_ + 1, "series of order " + std::to_string(order_) + " needs " +
                                              std::to_string(order_ + 1) + " coefficients");
}

TSeries TSeries::monomial(unsigned order, const BiPoly &c, unsigned power)
{
    TSeries r(order);
    if (power <= order) {
        r.coeffs_[power] = c;
    }
    return r;
}

bool TSeries::is_zero() const
{
    for (const auto &c : coeffs_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

unsigned TSeries::valuation() const
{
    for (unsigned k = 0; k <= order_; ++k) {
        if (!coeffs_[k].is_zero()) {
            return k;
        }
    }
    return order_ + 1;
}

TSeries &TSeries::operator+=(const TSeries &o)
{
    require_same_order(*this, o);
    for (unsigned k = 0; k <= order_; ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    return *this;
}

TSeries &TSeries::operator-=(const TSeries &o)
{
    require_same_order(*this, o);
    for (unsigned k = 0; k <= order_; ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    return *this;
}

TSeries &TSeries::operator*=(const Rational &c)
{
    for (auto &p : coeffs_) {
        p *= c;
    }
    return *this;
}

TSeries operator*(const TSeries &a, const TSeries &b)
{
    require_same_order(a, b);
    TSeries r(a.order_);
    for (unsigned i = 0; i <= a.order_; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (unsigned j = 0; i + j <= a.order_; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return r;
}

TSeries TSeries::operator-() const
{
    TSeries r = *this;
    for (auto &p : r.coeffs_) {
        p = -p;
    }
    return r;
}

TSeries TSeries::pow(unsigned k) const
{
    TSeries result = one(order_);
    for (unsigned i = 0; i < k; ++i) {
        result = result * *this;
    }
    return result;
}

TSeries TSeries::truncate(unsigned new_order) const
{
    require(new_order <= order_, "cannot truncate to a higher order");
    return TSeries(new_order, std::vector<BiPoly>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TSeries TSeries::substitute_powers(unsigned m) const
{
    require(m >= 1, "substitute_powers requires m >= 1");
    TSeries r(order_);
    for (unsigned k = 0; k * m <= order_; ++k) {
        r.coeffs_[k * m] = coeffs_[k].substitute_powers(m);
    }
    return r;
}

TSeries TSeries::negate_t() const
{
    TSeries r = *this;
    for (unsigned k = 1; k <= order_; k += 2) {
        r.coeffs_[k] = -r.coeffs_[k];
    }
    return r;
}

TSeries TSeries::scale(const BiPoly &p) const
{
    TSeries r = *this;
    for (auto &c : r.coeffs_) {
        c *= p;
    }
    return r;
}

std::string TSeries::to_string() const
{
    std::ostringstream os;
    for (unsigned k = 0; k <= order_; ++k) {
        os << "t^" << k << ": " << coeffs_[k] << '\n';
    }
    return os.str();
}

TSeries series_exp(const TSeries &s)
{
    require(s[0].is_zero(), "series_exp requires a zero constant term");
    // E' = S' E, so k E_k = sum_{j=1..k} j S_j E_{k-j}.
    const unsigned n = s.order();
    std::vector<BiPoly> e(n + 1);
    e[0] = BiPoly(1);
    for (unsigned k = 1; k <= n; ++k) {
        BiPoly acc;
        for (unsigned j = 1; j <= k; ++j) {
            if (!s[j].is_zero() && !e[k - j].is_zero()) {
                acc += s[j] * e[k - j] * Rational(static_cast<long>(j));
            }
        }
        e[k] = acc * Rational(1, static_cast<long>(k));
    }
    return TSeries(n, std::move(e));
}

TSeries series_log(const TSeries &s)
{
    require(s[0] == BiPoly(1), "series_log requires constant term 1");
    // S L' = S', so k L_k = k S_k - sum_{j=1..k-1} j L_j S_{k-j}.
    const unsigned n = s.order();
    std::vector<BiPoly> l(n + 1);
    for (unsigned k = 1; k <= n; ++k) {
        BiPoly acc = s[k] * Rational(static_cast<long>(k));
        for (unsigned j = 1; j < k; ++j) {
            if (!l[j].is_zero() && !s[k - j].is_zero()) {
                acc -= l[j] * s[k - j] * Rational(static_cast<long>(j));
            }
        }
        l[k] = acc * Rational(1, static_cast<long>(k));
    }
    return TSeries(n, std::move(l));
}

TSeries expand_product_of_powers(std::span<const PowerFactor> factors, unsigned order)
{
    TSeries result = TSeries::one(order);
    for (const auto &f : factors) {
        require(f.monomial.size() == 1, "product factor must be a single monomial term");
        require(f.t_power >= 1, "product factor needs a positive power of t");
        // (1 - m x)^e = sum_k binom(e, k) (-m)^k x^k
        const BiPoly neg = -f.monomial;
        TSeries factor(order);
        BiPoly power(1);
        for (unsigned k = 0; k * f.t_power <= order; ++k) {
            const Rational c = binomial(f.exponent, k);
            factor = factor + TSeries::monomial(order, power * c, k * f.t_power);
            power *= neg;
        }
        result = result * factor;
    }
    return result;
}

} // namespace plethora
