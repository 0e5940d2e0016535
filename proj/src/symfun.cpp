#include "plethora/symfun.hpp"

#include <sstream>

#include "plethora/determinant.hpp"
#include "plethora/error.hpp"

namespace plethora {

SymFun::SymFun(const Rational &c)
{
    add_term(Partition{}, c);
}

SymFun::SymFun(const Partition &lambda, const Rational &c)
{
    add_term(lambda, c);
}

SymFun SymFun::p(unsigned n)
{
    require(n >= 1, "power sum index must be positive");
    return SymFun(Partition{n});
}

void SymFun::add_term(const Partition &lambda, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Rational SymFun::coeff(const Partition &lambda) const
{
    const auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned SymFun::max_degree() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

SymFun SymFun::homogeneous_part(unsigned d) const
{
    SymFun r;
    for (const auto &[lambda, c] : terms_) {
        if (lambda.size() == d) {
            r.terms_.emplace(lambda, c);
        }
    }
    return r;
}

SymFun &SymFun::operator+=(const SymFun &o)
{
    for (const auto &[lambda, c] : o.terms_) {
        add_term(lambda, c);
    }
    return *this;
}

SymFun &SymFun::operator-=(const SymFun &o)
{
    for (const auto &[lambda, c] : o.terms_) {
        add_term(lambda, -c);
    }
    return *this;
}

SymFun &SymFun::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[lambda, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

SymFun operator*(const SymFun &a, const SymFun &b)
{
    SymFun r;
    for (const auto &[la, ca] : a.terms_) {
        for (const auto &[lb, cb] : b.terms_) {
            r.add_term(la.merged(lb), ca * cb);
        }
    }
    return r;
}

SymFun SymFun::pow(unsigned k) const
{
    SymFun r(1);
    for (unsigned i = 0; i < k; ++i) {
        r = r * *this;
    }
    return r;
}

std::string SymFun::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[lambda, c] : terms_) {
        const Rational magnitude = c.sign() < 0 ? -c : c;
        if (first) {
            os << (c.sign() < 0 ? "-" : "");
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (lambda.empty()) {
            os << magnitude;
            continue;
        }
        bool need_star = false;
        if (magnitude != Rational(1)) {
            os << magnitude;
            need_star = true;
        }
        // ascending parts: p1^3*p2
        const auto mult = lambda.multiplicities();
        for (const auto &[part, m] : mult) {
            os << (need_star ? "*" : "") << 'p' << part;
            if (m > 1) {
                os << '^' << m;
            }
            need_star = true;
        }
    }
    return os.str();
}

namespace {

SymFun signed_sum_over_partitions(unsigned n, bool elementary)
{
    SymFun r;
    for (const auto &lambda : partitions_of(n)) {
        Rational c = Rational(1) / z_of(lambda);
        if (elementary && (n - lambda.length()) % 2 == 1) {
            c = -c;
        }
        r += SymFun(lambda, c);
    }
    return r;
}

} // namespace

SymFun h_to_p(unsigned n)
{
    return signed_sum_over_partitions(n, false);
}

SymFun e_to_p(unsigned n)
{
    return signed_sum_over_partitions(n, true);
}

SymFun s_to_p(const Partition &lambda)
{
    const std::size_t len = lambda.length();
    std::vector<std::vector<SymFun>> m(len, std::vector<SymFun>(len));
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; j < len; ++j) {
            const long k = static_cast<long>(lambda.parts()[i]) - static_cast<long>(i) + static_cast<long>(j);
            if (k >= 0) {
                m[i][j] = h_to_p(static_cast<unsigned>(k));
            }
        }
    }
    return laplace_determinant(m, SymFun(), SymFun(1), [](const SymFun &f) { return f.is_zero(); });
}

BiPoly evaluate_two_variables(const SymFun &f)
{
    BiPoly r;
    for (const auto &[lambda, c] : f.terms()) {
        BiPoly term(c);
        for (unsigned part : lambda.parts()) {
            term *= BiPoly::monomial(part, 0) + BiPoly::monomial(0, part);
        }
        r += term;
    }
    return r;
}

} // namespace plethora
