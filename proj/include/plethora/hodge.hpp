#pragma once

#include <map>
#include <string>
#include <utility>

#include "plethora/bipoly.hpp"
#include "plethora/symfun.hpp"

namespace plethora {

/// Dimension n plus Hodge numbers h^{p,q} for 0 <= p, q <= n. Only nonzero
/// multiplicities are stored.
class HodgeDiamond {
public:
    using Index = std::pair<unsigned, unsigned>;

    HodgeDiamond() = default;
    HodgeDiamond(unsigned dim, std::map<Index, unsigned> h);

    /// "P1", "P2", "elliptic", or "empty".
    static HodgeDiamond named(const std::string &name);

    unsigned dim() const { return dim_; }
    const std::map<Index, unsigned> &numbers() const { return h_; }
    unsigned at(unsigned p, unsigned q) const;
    bool empty() const { return h_.empty(); }

    friend bool operator==(const HodgeDiamond &, const HodgeDiamond &) = default;

private:
    unsigned dim_ = 0;
    std::map<Index, unsigned> h_;
};

/// Polynomial with an explicit power of the grading variable z.
struct GradedPoly {
    BiPoly poly;
    unsigned grade = 0;

    friend bool operator==(const GradedPoly &, const GradedPoly &) = default;
};

/// Signed: sum h^{p,q} (-u)^p (-v)^q. Unsigned: sum h^{p,q} u^p v^q.
BiPoly e_polynomial(const HodgeDiamond &d, bool signed_form);

/// Cut-and-paste additivity e(X) = e(X \ Z) + e(Z).
BiPoly scissor_sum(const BiPoly &e1, const BiPoly &e2);

struct SymmetryReport {
    bool hodge_symmetric = false;
    bool serre_dual = false;

    bool both() const { return hodge_symmetric && serre_dual; }
};

SymmetryReport validate_symmetries(const HodgeDiamond &d);

/// sum c_{a,b} u^{n-a} v^{n-b}; every exponent must be at most n.
BiPoly serre_dual_transform(const BiPoly &f, unsigned n);

/// (u^p v^q + u^q v^p + u^{n-p} v^{n-q} + u^{n-q} v^{n-p}) z^n for
/// 0 <= q <= p <= n, p + q <= n. Coinciding monomials add up.
GradedPoly r_generator(unsigned p, unsigned q, unsigned n);

/// Writes a u<->v symmetric polynomial in two-variable power sums
/// p_r = u^r + v^r using u^a + v^a = p_a, u^a v^b + u^b v^a = p_a p_b - p_{a+b}
/// for a > b >= 1, and (uv)^m = ((p_1^2 - p_2)/2)^m.
SymFun two_var_power_sum_expand(const BiPoly &f);

/// Both sides of (uv)^n e(1/u, 1/v) = e(u, v) (with e the unsigned Hodge
/// polynomial) expanded in two-variable power sums. The diamond must satisfy
/// both Hodge symmetry and Serre duality.
std::pair<SymFun, SymFun> serre_duality_power_sum_relation(const HodgeDiamond &d);

} // namespace plethora
