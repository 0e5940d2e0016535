#include "plethora/genfun.hpp"

#include "plethora/abc.hpp"
#include "plethora/chromatic.hpp"
#include "plethora/error.hpp"
#include "plethora/plethysm.hpp"
#include "plethora/symfun.hpp"

namespace plethora {

TSeries pe(const TSeries &f)
{
    require(f[0].is_zero(), "pe requires a zero constant term");
    TSeries psi(f.order());
    for (unsigned m = 1; m <= f.order(); ++m) {
        psi += f.substitute_powers(m) * Rational(1, static_cast<long>(m));
    }
    return series_exp(psi);
}

TSeries pl(const TSeries &g)
{
    require(g[0] == BiPoly(1), "pl requires constant term 1");
    const TSeries log_g = series_log(g);
    TSeries r(g.order());
    for (unsigned m = 1; m <= g.order(); ++m) {
        const int mu = mobius(m);
        if (mu != 0) {
            r += log_g.substitute_powers(m) * Rational(mu, static_cast<long>(m));
        }
    }
    return r;
}

TSeries pe_product_formula(const HodgeDiamond &d, unsigned order)
{
    std::vector<PowerFactor> factors;
    for (const auto &[idx, mult] : d.numbers()) {
        factors.push_back({BiPoly::monomial(idx.first, idx.second), 1, -static_cast<long>(mult)});
    }
    return expand_product_of_powers(factors, order);
}

TSeries pe_via_hn(const BiPoly &f, unsigned order)
{
    return pe_via_hn(f, 1, order);
}

TSeries pe_via_hn(const BiPoly &f, unsigned t_power, unsigned order)
{
    require(t_power >= 1, "pe_via_hn needs a positive power of t");
    TSeries r(order);
    for (unsigned n = 0; n * t_power <= order; ++n) {
        r += pleth_concrete(h_to_p(n), f, t_power, order);
    }
    return r;
}

TSeries pe_via_coloring(const BiPoly &f, unsigned order)
{
    return pe_via_coloring(f, 1, order);
}

TSeries pe_via_coloring(const BiPoly &f, unsigned t_power, unsigned order)
{
    require(t_power >= 1, "pe_via_coloring needs a positive power of t");
    require(f.has_integer_coefficients(), "pe_via_coloring requires integer coefficients");
    const SignedVarList alphabet = var_multiset(-f, t_power);
    TSeries r = TSeries::one(order);
    for (unsigned n = 1; n * t_power <= order; ++n) {
        const TSeries sum = cs_coloring_sum(WeightedGraph::complete(n), alphabet, order);
        const Rational scale = Rational(BigInt(n % 2 == 0 ? 1 : -1), factorial(n));
        r += sum * scale;
    }
    return r;
}

std::vector<TSeries> h_plethysms(const TSeries &argument)
{
    std::vector<TSeries> h;
    h.reserve(argument.order() + 1);
    for (unsigned k = 0; k <= argument.order(); ++k) {
        h.push_back(pleth_concrete(h_to_p(k), argument));
    }
    return h;
}

namespace {

using HSeq = std::vector<TSeries>;

// h_k[F + G] = sum_j h_j[F] h_{k-j}[G]
HSeq sum_rule(const HSeq &f, const HSeq &g)
{
    const unsigned order = f.front().order();
    HSeq r(f.size(), TSeries(order));
    for (std::size_t k = 0; k < f.size(); ++k) {
        for (std::size_t j = 0; j <= k; ++j) {
            r[k] += f[j] * g[k - j];
        }
    }
    return r;
}

// h_k[F G] = sum_{lambda |- k} s_lambda[F] s_lambda[G]
HSeq product_rule(const HSeq &f, const HSeq &g)
{
    const unsigned order = f.front().order();
    HSeq r(f.size(), TSeries(order));
    for (std::size_t k = 0; k < f.size(); ++k) {
        for (const auto &lambda : partitions_of(static_cast<unsigned>(k))) {
            const TSeries sf = jacobi_trudi(lambda, f);
            if (sf.is_zero()) {
                continue;
            }
            r[k] += sf * jacobi_trudi(lambda, g);
        }
    }
    return r;
}

// h_k[-F] = (-1)^k e_k[F], with e_k[F] = s_{1^k}[F]
HSeq negate_rule(const HSeq &f)
{
    HSeq r;
    r.reserve(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        const TSeries e = jacobi_trudi(Partition(std::vector<unsigned>(k, 1)), f);
        r.push_back(k % 2 == 0 ? e : -e);
    }
    return r;
}

HSeq unit_sequence(unsigned order, std::size_t length)
{
    HSeq r(length, TSeries(order));
    r[0] = TSeries::one(order);
    return r;
}

// h_k[g t^t_power] from the signed coloring sums over K_k.
HSeq generator_sequence(const BiPoly &g, unsigned t_power, unsigned order)
{
    const SignedVarList alphabet = var_multiset(-g, t_power);
    HSeq r = unit_sequence(order, order + 1);
    for (unsigned k = 1; k <= order; ++k) {
        if (k * t_power > order) {
            break;
        }
        const TSeries sum = cs_coloring_sum(WeightedGraph::complete(k), alphabet, order);
        r[k] = sum * Rational(BigInt(k % 2 == 0 ? 1 : -1), factorial(k));
    }
    return r;
}

} // namespace

TSeries pe_via_generators(const HodgeDiamond &d, unsigned order)
{
    require(d.dim() >= 1, "pe_via_generators needs a diamond of positive dimension");
    const ABCPoly decomposition = abc_decompose(d);
    const std::size_t length = order + 1;

    const HSeq atoms[3] = {
        generator_sequence(BiPoly(1) + BiPoly::monomial(1, 1), 1, order), // A
        generator_sequence(BiPoly::u() + BiPoly::v(), 1, order),          // B
        generator_sequence(BiPoly::monomial(1, 1), 2, order),             // C
    };

    HSeq total = unit_sequence(order, length);
    for (const auto &[e, c] : decomposition.terms()) {
        require(c.is_integer(), "pe_via_generators: non-integral A/B/C coefficient " + c.to_string());
        HSeq monomial;
        const unsigned exponents[3] = {e.alpha, e.beta, e.gamma};
        for (int atom = 0; atom < 3; ++atom) {
            for (unsigned i = 0; i < exponents[atom]; ++i) {
                monomial = monomial.empty() ? atoms[atom] : product_rule(monomial, atoms[atom]);
            }
        }
        require(!monomial.empty(), "pe_via_generators: constant A/B/C term");
        const HSeq signed_monomial = c.sign() < 0 ? negate_rule(monomial) : monomial;
        const BigInt copies = abs(c.numerator());
        for (BigInt i = 0; i < copies; ++i) {
            total = sum_rule(total, signed_monomial);
        }
    }
    TSeries r(order);
    for (const auto &term : total) {
        r += term;
    }
    return r;
}

BiPoly conf_ordered_epoly(const BiPoly &e, unsigned n)
{
    BiPoly r(1);
    for (unsigned k = 0; k < n; ++k) {
        r *= e - BiPoly(Rational(static_cast<long>(k)));
    }
    return r;
}

int mobius(unsigned n)
{
    require(n >= 1, "mobius is defined for positive integers");
    int result = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

BiPoly alpha_j(const BiPoly &e, unsigned j)
{
    require(j >= 1, "alpha_j requires j >= 1");
    BiPoly r;
    for (unsigned d = 1; d <= j; ++d) {
        if (j % d == 0) {
            const int mu = mobius(j / d);
            if (mu != 0) {
                r += e.substitute_powers(d) * Rational(mu);
            }
        }
    }
    return r;
}

CycleType::CycleType(std::map<unsigned, unsigned> multiplicities)
{
    for (const auto &[j, count] : multiplicities) {
        require(j >= 1, "cycle lengths must be positive");
        if (count > 0) {
            mult_.emplace(j, count);
            n_ += j * count;
        }
    }
}

CycleType::CycleType(const Partition &cycle_lengths) : CycleType(cycle_lengths.multiplicities()) {}

Partition CycleType::as_partition() const
{
    std::vector<unsigned> parts;
    for (const auto &[j, count] : mult_) {
        parts.insert(parts.end(), count, j);
    }
    return Partition(std::move(parts));
}

BigInt CycleType::class_size() const
{
    const Rational size = Rational(factorial(n_)) / z_of(as_partition());
    return size.numerator();
}

BiPoly equiv_config_epoly(const BiPoly &e, const CycleType &sigma)
{
    BiPoly r(1);
    for (const auto &[j, count] : sigma.multiplicities()) {
        const BiPoly a = alpha_j(e, j);
        for (unsigned i = 0; i < count; ++i) {
            r *= a - BiPoly(Rational(static_cast<long>(i * j)));
        }
    }
    return r;
}

BiPoly config_symmetrization_average(const BiPoly &e, unsigned n)
{
    BiPoly total;
    for (const auto &lambda : partitions_of(n)) {
        const CycleType sigma(lambda);
        total += equiv_config_epoly(e, sigma) * Rational(sigma.class_size());
    }
    return total * Rational(BigInt(1), factorial(n));
}

TSeries ordered_sign_series(const HodgeDiamond &d, unsigned order)
{
    std::vector<PowerFactor> factors;
    for (const auto &[idx, mult] : d.numbers()) {
        factors.push_back({-BiPoly::monomial(idx.first, idx.second), 1, static_cast<long>(mult)});
    }
    return expand_product_of_powers(factors, order);
}

TSeries unordered_config_series(const HodgeDiamond &d, unsigned order)
{
    std::vector<PowerFactor> factors;
    for (const auto &[idx, mult] : d.numbers()) {
        const BiPoly m = BiPoly::monomial(idx.first, idx.second);
        factors.push_back({m, 2, static_cast<long>(mult)});
        factors.push_back({m, 1, -static_cast<long>(mult)});
    }
    return expand_product_of_powers(factors, order);
}

GeometricSeries charvar_full_from_irr(const GeometricSeries &irr, unsigned order)
{
    require(irr.series.order() >= order, "input series is truncated below the requested order");
    require(irr.series[0].is_zero(), "irreducible series must have zero constant term");
    return {pe(irr.series.truncate(order)), SeriesRole::full};
}

GeometricSeries charvar_irr_from_full(const GeometricSeries &full, unsigned order)
{
    require(full.series.order() >= order, "input series is truncated below the requested order");
    require(full.series[0] == BiPoly(1), "full series must have constant term 1");
    return {pl(full.series.truncate(order)), SeriesRole::irreducible};
}

} // namespace plethora
