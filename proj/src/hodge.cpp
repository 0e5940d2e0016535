#include "plethora/hodge.hpp"

#include "plethora/error.hpp"

namespace plethora {

HodgeDiamond::HodgeDiamond(unsigned dim, std::map<Index, unsigned> h) : dim_(dim)
{
    for (const auto &[idx, mult] : h) {
        require(idx.first <= dim && idx.second <= dim,
                "Hodge index (" + std::to_string(idx.first) + "," + std::to_string(idx.second) +
                    ") outside [0," + std::to_string(dim) + "]^2");
        if (mult > 0) {
            h_.emplace(idx, mult);
        }
    }
}

HodgeDiamond HodgeDiamond::named(const std::string &name)
{
    if (name == "P1") {
        return HodgeDiamond(1, {{{0, 0}, 1}, {{1, 1}, 1}});
    }
    if (name == "P2") {
        return HodgeDiamond(2, {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}});
    }
    if (name == "elliptic") {
        return HodgeDiamond(1, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}});
    }
    if (name == "empty") {
        return HodgeDiamond();
    }
    throw PreconditionError("unknown diamond '" + name + "' (expected P1, P2, elliptic or empty)");
}

unsigned HodgeDiamond::at(unsigned p, unsigned q) const
{
    const auto it = h_.find({p, q});
    return it == h_.end() ? 0 : it->second;
}

BiPoly e_polynomial(const HodgeDiamond &d, bool signed_form)
{
    BiPoly r;
    for (const auto &[idx, mult] : d.numbers()) {
        Rational c(static_cast<long>(mult));
        if (signed_form && (idx.first + idx.second) % 2 == 1) {
            c = -c;
        }
        r += BiPoly::monomial(idx.first, idx.second, c);
    }
    return r;
}

BiPoly scissor_sum(const BiPoly &e1, const BiPoly &e2)
{
    return e1 + e2;
}

SymmetryReport validate_symmetries(const HodgeDiamond &d)
{
    SymmetryReport r{true, true};
    const unsigned n = d.dim();
    for (const auto &[idx, mult] : d.numbers()) {
        const auto [p, q] = idx;
        if (d.at(q, p) != mult) {
            r.hodge_symmetric = false;
        }
        if (d.at(n - p, n - q) != mult) {
            r.serre_dual = false;
        }
    }
    return r;
}

BiPoly serre_dual_transform(const BiPoly &f, unsigned n)
{
    BiPoly r;
    for (const auto &[m, c] : f.terms()) {
        require(m.a <= n && m.b <= n, "serre_dual_transform: exponent of " + f.to_string() + " exceeds n = " +
                                          std::to_string(n));
        r += BiPoly::monomial(n - m.a, n - m.b, c);
    }
    return r;
}

GradedPoly r_generator(unsigned p, unsigned q, unsigned n)
{
    require(q <= p && p <= n && p + q <= n, "r_generator requires 0 <= q <= p <= n and p + q <= n");
    BiPoly s = BiPoly::monomial(p, q) + BiPoly::monomial(q, p) + BiPoly::monomial(n - p, n - q) +
               BiPoly::monomial(n - q, n - p);
    return {s, n};
}

SymFun two_var_power_sum_expand(const BiPoly &f)
{
    require(f == f.swap_uv(), "two_var_power_sum_expand requires a polynomial symmetric in u and v");
    const SymFun e2 = (SymFun(Partition{1, 1}) - SymFun::p(2)) * Rational(1, 2);
    SymFun r;
    for (const auto &[m, c] : f.terms()) {
        if (m.a < m.b) {
            continue; // paired with its mirror image
        }
        if (m.a == m.b) {
            r += e2.pow(m.a) * c;
        } else if (m.b == 0) {
            r += SymFun::p(m.a) * c;
        } else {
            r += (SymFun(Partition{m.a, m.b}) - SymFun::p(m.a + m.b)) * c;
        }
    }
    return r;
}

std::pair<SymFun, SymFun> serre_duality_power_sum_relation(const HodgeDiamond &d)
{
    const SymmetryReport report = validate_symmetries(d);
    require(report.hodge_symmetric, "diamond violates Hodge symmetry h^{p,q} = h^{q,p}");
    require(report.serre_dual, "diamond violates Serre duality h^{p,q} = h^{n-p,n-q}");
    const BiPoly e = e_polynomial(d, false);
    const BiPoly dual = serre_dual_transform(e, d.dim());
    return {two_var_power_sum_expand(dual), two_var_power_sum_expand(e)};
}

} // namespace plethora
