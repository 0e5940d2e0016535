#pragma once

#include <map>
#include <vector>

#include "plethora/bipoly.hpp"
#include "plethora/hodge.hpp"
#include "plethora/partition.hpp"
#include "plethora/tseries.hpp"

namespace plethora {

/// Plethystic exponential exp(sum_{m>=1} f(u^m, v^m, t^m) / m).
/// f must have zero constant term.
TSeries pe(const TSeries &f);

/// Plethystic logarithm sum_{m>=1} mu(m)/m log g(u^m, v^m, t^m), the inverse
/// of pe. g must have constant term 1.
TSeries pl(const TSeries &g);

/// prod_{p,q} (1 - u^p v^q t)^{-h^{p,q}}.
TSeries pe_product_formula(const HodgeDiamond &d, unsigned order);

/// sum_n h_n[f t^t_power].
TSeries pe_via_hn(const BiPoly &f, unsigned order);
TSeries pe_via_hn(const BiPoly &f, unsigned t_power, unsigned order);

/// sum_n (-1)^n/n! X_{K_n}[-f t^t_power], each plethysm evaluated as a signed
/// coloring sum over acyclic orientations of K_n. f needs integer coefficients.
TSeries pe_via_coloring(const BiPoly &f, unsigned order);
TSeries pe_via_coloring(const BiPoly &f, unsigned t_power, unsigned order);

/// h_0[F], ..., h_order[F] for a concrete argument F with zero constant term.
std::vector<TSeries> h_plethysms(const TSeries &argument);

/// PE of HD(X) z^n (z carried by t) assembled only from the plethysms
/// h_k[A], h_k[B], h_k[C] of the three generators, each computed as a
/// coloring sum, combined through the sum rule, the Schur product rule with
/// Jacobi-Trudi determinants, and h_k[-F] = (-1)^k e_k[F].
/// The diamond must be symmetric with dim >= 1.
TSeries pe_via_generators(const HodgeDiamond &d, unsigned order);

/// e(e-1)...(e-(n-1)).
BiPoly conf_ordered_epoly(const BiPoly &e, unsigned n);

/// Moebius function by trial division.
int mobius(unsigned n);

/// sum_{d | j} mu(j/d) e(u^d, v^d).
BiPoly alpha_j(const BiPoly &e, unsigned j);

/// Conjugacy class of S_n described by the number of j-cycles.
class CycleType {
public:
    /// multiplicities[j] = n_j; zero entries are ignored.
    explicit CycleType(std::map<unsigned, unsigned> multiplicities);
    /// Cycle lengths given as a partition of n.
    explicit CycleType(const Partition &cycle_lengths);

    static CycleType identity(unsigned n) { return CycleType(std::map<unsigned, unsigned>{{1, n}}); }

    unsigned n() const { return n_; }
    const std::map<unsigned, unsigned> &multiplicities() const { return mult_; }
    Partition as_partition() const;
    /// n! / z_lambda.
    BigInt class_size() const;

private:
    std::map<unsigned, unsigned> mult_;
    unsigned n_ = 0;
};

/// prod_j alpha_j (alpha_j - j) ... (alpha_j - (n_j - 1) j).
BiPoly equiv_config_epoly(const BiPoly &e, const CycleType &sigma);

/// (1/n!) sum over cycle types of |class| * equiv_config_epoly.
BiPoly config_symmetrization_average(const BiPoly &e, unsigned n);

/// prod_{p,q} (1 + u^p v^q t)^{h^{p,q}}.
TSeries ordered_sign_series(const HodgeDiamond &d, unsigned order);

/// prod_{p,q} ((1 - u^p v^q t^2) / (1 - u^p v^q t))^{h^{p,q}}.
TSeries unordered_config_series(const HodgeDiamond &d, unsigned order);

enum class SeriesRole { full, irreducible, generic };

struct GeometricSeries {
    TSeries series;
    SeriesRole role = SeriesRole::generic;
};

/// sum E(X_Gamma GL_n) t^n = PE(sum E(X_Gamma^irr GL_n) t^n).
GeometricSeries charvar_full_from_irr(const GeometricSeries &irr, unsigned order);
GeometricSeries charvar_irr_from_full(const GeometricSeries &full, unsigned order);

} // namespace plethora
