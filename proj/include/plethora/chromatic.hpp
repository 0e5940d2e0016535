#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "plethora/bipoly.hpp"
#include "plethora/graph.hpp"
#include "plethora/partition.hpp"
#include "plethora/symfun.hpp"
#include "plethora/tseries.hpp"

namespace plethora {

/// Limit on enumerated states (orientations, colorings). Defaults to 10^7 and
/// can be overridden with the PLETHORA_MAX_STATES environment variable.
std::uint64_t max_states();

/// Largest edge count accepted by the edge-subset expansion of csf().
inline constexpr unsigned kMaxCsfEdges = 20;

/// Chromatic symmetric function X_(G,w) in the power-sum basis, from
/// X = sum_{S subset E} (-1)^|S| p_{lambda(S)} where lambda(S) lists the total
/// weights of the connected components of (V, S).
SymFun csf(const WeightedGraph &g);

/// Polynomial in a fixed number of variables x_1..x_k.
struct KVarPoly {
    unsigned n_vars = 0;
    std::map<std::vector<unsigned>, Rational> terms;

    friend bool operator==(const KVarPoly &, const KVarPoly &) = default;
};

/// Sum over all proper colorings kappa: V -> {1..k} of prod_v x_{kappa(v)}^{w(v)}.
KVarPoly csf_bruteforce(const WeightedGraph &g, unsigned k);

/// f evaluated at x_1..x_k with all other variables zero.
KVarPoly specialize(const SymFun &f, unsigned k);

/// Number of proper colorings with k colors, continued polynomially to any
/// integer k (so k = -1 is allowed).
BigInt chromatic_polynomial(const WeightedGraph &g, long k);

/// One directed arc per edge of the graph, in the graph's edge order.
struct AcyclicOrientation {
    std::vector<std::pair<unsigned, unsigned>> arcs;

    friend bool operator==(const AcyclicOrientation &, const AcyclicOrientation &) = default;
};

/// Every acyclic orientation. Edges are oriented in order, trying i -> j
/// (i < j) before j -> i, and a choice is pruned as soon as it closes a cycle.
std::vector<AcyclicOrientation> acyclic_orientations(const WeightedGraph &g);

/// A signed copy of one monomial of a polynomial.
struct SignedVar {
    Monomial monomial;
    unsigned t_power = 0;
    int sign = 1;
    unsigned copy = 0;

    friend bool operator==(const SignedVar &, const SignedVar &) = default;
};

/// Ordered alphabet of signed variables; list position is the total order.
using SignedVarList = std::vector<SignedVar>;

/// |c| copies of each monomial of f with sign sgn(c). Ordered by monomial
/// (canonical BiPoly order), negative before positive, copies adjacent.
/// Coefficients must be integers.
SignedVarList var_multiset(const BiPoly &f, unsigned t_power);

/// Sum over pairs (acyclic orientation, order-compatible coloring into the
/// alphabet) of prod_v sgn(kappa(v)) kappa(v)^{w(v)}. A coloring is
/// compatible when kappa(a) <= kappa(b) along every arc a -> b, with equality
/// allowed only for negative variables.
TSeries cs_coloring_sum(const WeightedGraph &g, const SignedVarList &alphabet, unsigned order);

/// cs_coloring_sum over var_multiset(f, t_power).
TSeries cs_coloring_sum(const WeightedGraph &g, const BiPoly &f, unsigned t_power, unsigned order);

/// Transition matrix from {X_{G_lambda}} to {p_mu} for lambda, mu |- degree.
/// Rows and columns follow partitions_of(degree).
struct CsfBasisMatrix {
    unsigned degree = 0;
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    std::vector<std::vector<Rational>> entries;

    Rational at(const Partition &row, const Partition &col) const;
};

/// X_{G_lambda} for G_lambda the disjoint union of family members G_{lambda_i}.
/// family[k-1] must be connected with k vertices.
SymFun csf_of_union(std::span<const WeightedGraph> family, const Partition &lambda);

/// Basis matrix for the given connected-graph family; rejects families that
/// are too short, disconnected, or have the wrong vertex counts, and
/// singular matrices.
CsfBasisMatrix csf_basis_matrix(std::span<const WeightedGraph> family, unsigned degree);

/// Coefficients c_lambda with h_n = sum_lambda c_lambda X_{G_lambda}.
std::map<Partition, Rational> h_in_csf_basis(unsigned n, std::span<const WeightedGraph> family);

/// Named families: "complete" (K_1, K_2, ...) and "path" (P_1, P_2, ...).
std::vector<WeightedGraph> graph_family(const std::string &name, unsigned max_vertices);

} // namespace plethora
