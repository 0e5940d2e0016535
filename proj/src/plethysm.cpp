#include "plethora/plethysm.hpp"

#include <map>

#include "plethora/determinant.hpp"
#include "plethora/error.hpp"

namespace plethora {

namespace {

// p_n[g]: rational coefficients are constants, so only the partitions scale.
SymFun power_sum_pleth(unsigned n, const SymFun &g)
{
    SymFun r;
    for (const auto &[lambda, c] : g.terms()) {
        r += SymFun(lambda.scaled(n), c);
    }
    return r;
}

} // namespace

SymFun pleth_abstract(const SymFun &f, const SymFun &g)
{
    std::map<unsigned, SymFun> cache;
    auto pn = [&](unsigned n) -> const SymFun & {
        auto it = cache.find(n);
        if (it == cache.end()) {
            it = cache.emplace(n, power_sum_pleth(n, g)).first;
        }
        return it->second;
    };
    SymFun r;
    for (const auto &[lambda, c] : f.terms()) {
        SymFun term(c);
        for (unsigned part : lambda.parts()) {
            term = term * pn(part);
        }
        r += term;
    }
    return r;
}

TSeries pleth_concrete(const SymFun &f, const TSeries &argument)
{
    require(argument[0].is_zero(), "plethysm against a concrete argument with nonzero constant term");
    const unsigned order = argument.order();
    std::map<unsigned, TSeries> cache;
    auto pk = [&](unsigned k) -> const TSeries & {
        auto it = cache.find(k);
        if (it == cache.end()) {
            it = cache.emplace(k, argument.substitute_powers(k)).first;
        }
        return it->second;
    };
    TSeries r(order);
    for (const auto &[lambda, c] : f.terms()) {
        // each p_k[G] has t-valuation >= k
        if (lambda.size() > order) {
            continue;
        }
        TSeries term = TSeries::monomial(order, BiPoly(c), 0);
        for (unsigned part : lambda.parts()) {
            term = term * pk(part);
        }
        r += term;
    }
    return r;
}

TSeries pleth_concrete(const SymFun &f, const BiPoly &g, unsigned t_power, unsigned order)
{
    if (t_power == 0) {
        require(g.constant_term().is_zero(),
                "plethysm against a concrete argument with nonzero constant term");
        // No t-grading: the result lives entirely in t^0.
        BiPoly total;
        std::map<unsigned, BiPoly> cache;
        for (const auto &[lambda, c] : f.terms()) {
            BiPoly term(c);
            for (unsigned part : lambda.parts()) {
                auto it = cache.find(part);
                if (it == cache.end()) {
                    it = cache.emplace(part, g.substitute_powers(part)).first;
                }
                term *= it->second;
            }
            total += term;
        }
        return TSeries::monomial(order, total, 0);
    }
    std::map<unsigned, BiPoly> cache;
    TSeries r(order);
    for (const auto &[lambda, c] : f.terms()) {
        const unsigned degree = lambda.size() * t_power;
        if (degree > order) {
            continue;
        }
        BiPoly term(c);
        for (unsigned part : lambda.parts()) {
            auto it = cache.find(part);
            if (it == cache.end()) {
                it = cache.emplace(part, g.substitute_powers(part)).first;
            }
            term *= it->second;
        }
        r += TSeries::monomial(order, term, degree);
    }
    return r;
}

TSeries jacobi_trudi(const Partition &lambda, const std::vector<TSeries> &h_values)
{
    require(!h_values.empty(), "Jacobi-Trudi needs at least h_0");
    const unsigned order = h_values.front().order();
    const std::size_t len = lambda.length();
    std::vector<std::vector<TSeries>> m(len, std::vector<TSeries>(len, TSeries(order)));
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; j < len; ++j) {
            const long k = static_cast<long>(lambda.parts()[i]) - static_cast<long>(i) + static_cast<long>(j);
            if (k < 0) {
                continue;
            }
            require(static_cast<std::size_t>(k) < h_values.size(), "Jacobi-Trudi entry h_k not supplied");
            m[i][j] = h_values[static_cast<std::size_t>(k)];
        }
    }
    return laplace_determinant(m, TSeries(order), TSeries::one(order),
                               [](const TSeries &s) { return s.is_zero(); });
}

TSeries pleth_schur_via_jt(const Partition &lambda, const BiPoly &g, unsigned t_power, unsigned order)
{
    const unsigned max_index = lambda.empty() ? 0 : lambda.parts().front() + static_cast<unsigned>(lambda.length());
    std::vector<TSeries> h_values;
    h_values.reserve(max_index + 1);
    for (unsigned k = 0; k <= max_index; ++k) {
        h_values.push_back(pleth_concrete(h_to_p(k), g, t_power, order));
    }
    return jacobi_trudi(lambda, h_values);
}

} // namespace plethora
