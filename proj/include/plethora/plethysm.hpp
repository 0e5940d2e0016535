#pragma once

#include "plethora/bipoly.hpp"
#include "plethora/partition.hpp"
#include "plethora/symfun.hpp"
#include "plethora/tseries.hpp"

namespace plethora {

/// f[g] computed from the power-sum rules: p_n[p_m] = p_{nm}, p_n acts
/// additively and multiplicatively, rational constants are fixed, and the
/// outer argument is extended linearly and multiplicatively.
SymFun pleth_abstract(const SymFun &f, const SymFun &g);

/// f[g * t^t_power] where g is a concrete polynomial in u, v whose monomials
/// play the role of the alphabet: p_k acts by u -> u^k, v -> v^k, t -> t^k.
/// The argument must have zero constant term: either t_power >= 1 or g(0,0) = 0.
TSeries pleth_concrete(const SymFun &f, const BiPoly &g, unsigned t_power, unsigned order);

/// f[G] for a concrete series argument G with zero t^0 coefficient.
TSeries pleth_concrete(const SymFun &f, const TSeries &argument);

/// s_lambda[g t^t_power] as det(h_{lambda_i - i + j}[g t^t_power]).
TSeries pleth_schur_via_jt(const Partition &lambda, const BiPoly &g, unsigned t_power, unsigned order);

/// Jacobi-Trudi determinant over precomputed plethysms h_0[F], h_1[F], ...
/// (index k holds h_k[F]); entries past the end must not be needed.
TSeries jacobi_trudi(const Partition &lambda, const std::vector<TSeries> &h_values);

} // namespace plethora
