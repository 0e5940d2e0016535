#include "plethora/abc.hpp"

#include <sstream>

#include "plethora/error.hpp"

namespace plethora {

ZPoly::ZPoly(const BiPoly &p, unsigned grade)
{
    if (!p.is_zero()) {
        grades_.emplace(grade, p);
    }
}

ZPoly &ZPoly::operator+=(const ZPoly &o)
{
    for (const auto &[g, p] : o.grades_) {
        BiPoly &slot = grades_[g];
        slot += p;
        if (slot.is_zero()) {
            grades_.erase(g);
        }
    }
    return *this;
}

ZPoly operator*(const ZPoly &a, const ZPoly &b)
{
    ZPoly r;
    for (const auto &[ga, pa] : a.grades_) {
        for (const auto &[gb, pb] : b.grades_) {
            r += ZPoly(pa * pb, ga + gb);
        }
    }
    return r;
}

ZPoly operator*(ZPoly a, const Rational &c)
{
    if (c.is_zero()) {
        return ZPoly();
    }
    for (auto &[g, p] : a.grades_) {
        p *= c;
    }
    return a;
}

std::string ZPoly::to_string() const
{
    if (grades_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[g, p] : grades_) {
        os << (first ? "" : " + ") << '(' << p << ")*z^" << g;
        first = false;
    }
    return os.str();
}

bool ABCOrder::operator()(const ABCExponent &x, const ABCExponent &y) const
{
    if (x.z_degree() != y.z_degree()) {
        return x.z_degree() < y.z_degree();
    }
    if (x.alpha != y.alpha) {
        return x.alpha > y.alpha;
    }
    return x.beta > y.beta;
}

ABCPoly::ABCPoly(const Rational &c)
{
    add_term({}, c);
}

ABCPoly::ABCPoly(ABCExponent e, const Rational &c)
{
    add_term(e, c);
}

void ABCPoly::add_term(ABCExponent e, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Rational ABCPoly::coeff(ABCExponent e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

ABCPoly &ABCPoly::operator+=(const ABCPoly &o)
{
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

ABCPoly &ABCPoly::operator-=(const ABCPoly &o)
{
    for (const auto &[e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

ABCPoly operator*(const ABCPoly &a, const ABCPoly &b)
{
    ABCPoly r;
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            r.add_term({ea.alpha + eb.alpha, ea.beta + eb.beta, ea.gamma + eb.gamma}, ca * cb);
        }
    }
    return r;
}

ABCPoly operator*(ABCPoly a, const Rational &c)
{
    ABCPoly r;
    for (const auto &[e, coeff] : a.terms_) {
        r.add_term(e, coeff * c);
    }
    return r;
}

ABCPoly ABCPoly::pow(unsigned k) const
{
    ABCPoly r(1);
    for (unsigned i = 0; i < k; ++i) {
        r = r * *this;
    }
    return r;
}

ZPoly ABCPoly::expand() const
{
    const ZPoly a(BiPoly(1) + BiPoly::monomial(1, 1), 1);
    const ZPoly b(BiPoly::u() + BiPoly::v(), 1);
    const ZPoly c(BiPoly::monomial(1, 1), 2);
    auto power = [](const ZPoly &x, unsigned k) {
        ZPoly r(BiPoly(1), 0);
        for (unsigned i = 0; i < k; ++i) {
            r = r * x;
        }
        return r;
    };
    ZPoly total;
    for (const auto &[e, coeff] : terms_) {
        total += power(a, e.alpha) * power(b, e.beta) * power(c, e.gamma) * coeff;
    }
    return total;
}

std::string ABCPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        const Rational magnitude = c.sign() < 0 ? -c : c;
        if (first) {
            os << (c.sign() < 0 ? "-" : "");
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool constant = e.z_degree() == 0;
        bool need_star = false;
        if (constant || magnitude != Rational(1)) {
            os << magnitude;
            need_star = true;
        }
        const std::pair<char, unsigned> factors[] = {{'A', e.alpha}, {'B', e.beta}, {'C', e.gamma}};
        for (const auto &[name, k] : factors) {
            if (k == 0) {
                continue;
            }
            os << (need_star ? "*" : "") << name;
            if (k > 1) {
                os << '^' << k;
            }
            need_star = true;
        }
    }
    return os.str();
}

ABCPoly abc_sequence(unsigned s, ABCSequence which)
{
    const ABCPoly step = which == ABCSequence::A ? ABCPoly::B() : ABCPoly::A();
    const ABCPoly c = ABCPoly::C();
    ABCPoly prev(2);
    if (s == 0) {
        return prev;
    }
    ABCPoly cur = step;
    for (unsigned k = 2; k <= s; ++k) {
        ABCPoly next = step * cur - c * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ABCPoly r_generator_abc(unsigned p, unsigned q, unsigned n)
{
    require(q <= p && p <= n && p + q <= n, "r_generator requires 0 <= q <= p <= n and p + q <= n");
    const unsigned c_power = std::min(q, n - p);
    const unsigned t_index = (n - p > q) ? (n - p - q) : (q - (n - p));
    return abc_sequence(p - q, ABCSequence::A) * ABCPoly::C().pow(c_power) * abc_sequence(t_index, ABCSequence::T);
}

ABCPoly abc_decompose(const HodgeDiamond &d)
{
    const SymmetryReport report = validate_symmetries(d);
    require(report.hodge_symmetric, "abc_decompose: diamond violates Hodge symmetry h^{p,q} = h^{q,p}");
    require(report.serre_dual, "abc_decompose: diamond violates Serre duality h^{p,q} = h^{n-p,n-q}");
    const unsigned n = d.dim();
    ABCPoly result;
    // One representative per orbit of (p,q) -> (q,p), (p,q) -> (n-p,n-q):
    // the unique member with q <= p and p + q <= n. R_{p,q,n} sums the four
    // images, so an orbit of size k is covered k/4 times over.
    for (unsigned p = 0; p <= n; ++p) {
        for (unsigned q = 0; q <= p && p + q <= n; ++q) {
            const unsigned mult = d.at(p, q);
            if (mult == 0) {
                continue;
            }
            const std::pair<unsigned, unsigned> images[] = {{p, q}, {q, p}, {n - p, n - q}, {n - q, n - p}};
            unsigned orbit_size = 0;
            for (std::size_t i = 0; i < 4; ++i) {
                bool repeated = false;
                for (std::size_t j = 0; j < i; ++j) {
                    repeated = repeated || images[j] == images[i];
                }
                orbit_size += repeated ? 0 : 1;
            }
            const Rational weight = Rational(static_cast<long>(mult * orbit_size), 4);
            result += r_generator_abc(p, q, n) * weight;
        }
    }
    return result;
}

ABCPoly birational_reduce(const ABCPoly &f)
{
    ABCPoly r;
    for (const auto &[e, c] : f.terms()) {
        if (e.gamma == 0) {
            r += ABCPoly(e, c);
        }
    }
    return r;
}

} // namespace plethora
