#include "doctest.h"
#include "oracles.hpp"

#include "plethora/abc.hpp"
#include "plethora/error.hpp"
#include "plethora/hodge.hpp"

using namespace plethora;

namespace {

BiPoly poly(const char *s) { return BiPoly::parse(s); }

} // namespace

TEST_CASE("E-polynomials")
{
    CHECK(e_polynomial(HodgeDiamond::named("P1"), false) == poly("1 + u*v"));
    CHECK(e_polynomial(HodgeDiamond::named("elliptic"), false) == poly("1 + u + v + u*v"));
    CHECK(e_polynomial(HodgeDiamond::named("elliptic"), true) == poly("1 - u - v + u*v"));
    CHECK(e_polynomial(HodgeDiamond::named("P2"), true) == poly("1 + u*v + u^2*v^2"));
    CHECK(e_polynomial(HodgeDiamond::named("empty"), false).is_zero());
    CHECK_THROWS_AS(HodgeDiamond(1, {{{2, 0}, 1}}), PreconditionError);
    CHECK(HodgeDiamond(1, {{{0, 0}, 0}, {{1, 1}, 1}}).numbers().size() == 1);
    CHECK_THROWS_AS(HodgeDiamond::named("K3"), PreconditionError);
}

TEST_CASE("scissor sums")
{
    CHECK(scissor_sum(poly("u*v"), BiPoly(1)) == e_polynomial(HodgeDiamond::named("P1"), true));
    CHECK(scissor_sum(poly("1 + u*v"), poly("u^2*v^2")) == e_polynomial(HodgeDiamond::named("P2"), true));
    CHECK(scissor_sum(poly("u - v"), BiPoly()) == poly("u - v"));
}

TEST_CASE("symmetry validation")
{
    CHECK(validate_symmetries(HodgeDiamond::named("P2")).both());
    CHECK(validate_symmetries(HodgeDiamond::named("elliptic")).both());
    CHECK_FALSE(validate_symmetries(HodgeDiamond(1, {{{0, 0}, 1}, {{1, 0}, 1}})).hodge_symmetric);
    const SymmetryReport r = validate_symmetries(HodgeDiamond(1, {{{0, 0}, 1}, {{1, 1}, 2}}));
    CHECK(r.hodge_symmetric);
    CHECK_FALSE(r.serre_dual);
}

TEST_CASE("Serre dual transform")
{
    CHECK(serre_dual_transform(poly("1 + u*v"), 1) == poly("1 + u*v"));
    CHECK(serre_dual_transform(poly("1 + u"), 1) == poly("u*v + v"));
    CHECK_THROWS_AS(serre_dual_transform(poly("u^2"), 1), PreconditionError);
    for (const char *name : {"P1", "P2", "elliptic"}) {
        const HodgeDiamond d = HodgeDiamond::named(name);
        const BiPoly e = e_polynomial(d, true);
        CHECK(serre_dual_transform(e, d.dim()) == e);
    }
    oracle::Gen gen(41);
    for (int i = 0; i < 30; ++i) {
        const BiPoly f = gen.bipoly(4, 3);
        CHECK(serre_dual_transform(serre_dual_transform(f, 3), 3) == f);
    }
}

TEST_CASE("R generators")
{
    CHECK(r_generator(1, 0, 2) == GradedPoly{poly("u + v + u*v^2 + u^2*v"), 2});
    CHECK(r_generator(0, 0, 0) == GradedPoly{BiPoly(4), 0});
    for (unsigned n = 1; n <= 5; ++n) {
        // both (p,q) and (n-q,n-p) land on u^n, so every term is doubled
        const BiPoly want = (BiPoly::monomial(n, 0) + BiPoly::monomial(0, n)) * Rational(2);
        CHECK(r_generator(n, 0, n) == GradedPoly{want, n});
    }
    CHECK_THROWS_AS(r_generator(0, 1, 2), PreconditionError);
    CHECK_THROWS_AS(r_generator(2, 1, 2), PreconditionError);
}

TEST_CASE("A and T sequences")
{
    const ABCPoly A = ABCPoly::A(), B = ABCPoly::B(), C = ABCPoly::C();
    CHECK(abc_sequence(2, ABCSequence::A) == B * B - C * Rational(2));
    CHECK(abc_sequence(1, ABCSequence::T) == A);
    CHECK(abc_sequence(2, ABCSequence::T) == A * A - C * Rational(2));
    CHECK(abc_sequence(3, ABCSequence::A) == B.pow(3) - B * C * Rational(3));
    CHECK(abc_sequence(3, ABCSequence::A).to_string() == "B^3 - 3*B*C");
    for (unsigned s = 1; s <= 8; ++s) {
        CHECK(abc_sequence(s, ABCSequence::A).expand() == ZPoly(BiPoly::monomial(s, 0) + BiPoly::monomial(0, s), s));
        CHECK(abc_sequence(s, ABCSequence::T).expand() == ZPoly(BiPoly(1) + BiPoly::monomial(s, s), s));
    }
}

TEST_CASE("generating functions of the A and T sequences")
{
    // (Bw - Cw^2 - 1) * sum A_s w^s = Bw - 2 up to w^8, and likewise for T with A in place of B.
    for (ABCSequence which : {ABCSequence::A, ABCSequence::T}) {
        const ABCPoly X = which == ABCSequence::A ? ABCPoly::B() : ABCPoly::A();
        const unsigned order = 8;
        std::vector<ABCPoly> lhs(order + 1);
        for (unsigned s = 0; s <= order; ++s) {
            const ABCPoly a = abc_sequence(s, which);
            lhs[s] -= a;
            if (s + 1 <= order) {
                lhs[s + 1] += X * a;
            }
            if (s + 2 <= order) {
                lhs[s + 2] -= ABCPoly::C() * a;
            }
        }
        CHECK(lhs[0] == ABCPoly(-2));
        CHECK(lhs[1] == X);
        for (unsigned k = 2; k <= order; ++k) {
            CHECK(lhs[k].is_zero());
        }
    }
}

TEST_CASE("R generators factor through A, C and T")
{
    for (unsigned n = 0; n <= 5; ++n) {
        for (unsigned p = 0; p <= n; ++p) {
            for (unsigned q = 0; q <= p && p + q <= n; ++q) {
                CHECK(r_generator_abc(p, q, n).expand() == ZPoly(r_generator(p, q, n)));
            }
        }
    }
}

TEST_CASE("A/B/C decomposition")
{
    const ABCPoly A = ABCPoly::A(), B = ABCPoly::B(), C = ABCPoly::C();
    CHECK(abc_decompose(HodgeDiamond::named("P1")) == A);
    CHECK(abc_decompose(HodgeDiamond::named("elliptic")) == A + B);
    CHECK(abc_decompose(HodgeDiamond::named("P2")) == A * A - C);
    CHECK(abc_decompose(HodgeDiamond::named("P2")).to_string() == "A^2 - C");
    CHECK_THROWS_AS(abc_decompose(HodgeDiamond(1, {{{0, 0}, 1}, {{1, 0}, 1}})), PreconditionError);
    oracle::Gen gen(42);
    for (int i = 0; i < 20; ++i) {
        const HodgeDiamond d = gen.symmetric_diamond(gen.integer(0, 5));
        CHECK(abc_decompose(d).expand() == ZPoly(e_polynomial(d, false), d.dim()));
    }
}

TEST_CASE("birational reduction")
{
    const ABCPoly A = ABCPoly::A(), B = ABCPoly::B(), C = ABCPoly::C();
    CHECK(birational_reduce(A * A - C) == A * A);
    CHECK(birational_reduce(B.pow(3) - B * C * Rational(3)) == B.pow(3));
    CHECK(birational_reduce(A + B) == A + B);
    CHECK(birational_reduce(abc_decompose(HodgeDiamond::named("P2"))) == A * A);
}

TEST_CASE("two-variable power-sum expansion")
{
    const SymFun p1 = SymFun::p(1), p2 = SymFun::p(2), p3 = SymFun::p(3);
    CHECK(two_var_power_sum_expand(poly("u*v^2 + u^2*v")) == p1 * p2 - p3);
    CHECK(two_var_power_sum_expand(poly("u*v")) == p1 * p1 * Rational(1, 2) - p2 * Rational(1, 2));
    CHECK(two_var_power_sum_expand(poly("u^2*v^2")) ==
          p1.pow(4) * Rational(1, 4) - p1 * p1 * p2 * Rational(1, 2) + p2 * p2 * Rational(1, 4));
    CHECK_THROWS_AS(two_var_power_sum_expand(poly("u")), PreconditionError);
    oracle::Gen gen(43);
    for (int i = 0; i < 40; ++i) {
        const BiPoly f = gen.symmetric_bipoly(8);
        CHECK(evaluate_two_variables(two_var_power_sum_expand(f)) == f);
    }
}

TEST_CASE("Serre duality in power sums")
{
    const auto [dual, direct] = serre_duality_power_sum_relation(HodgeDiamond::named("P1"));
    const SymFun want = SymFun(1) + SymFun(Partition{1, 1}, Rational(1, 2)) - SymFun(Partition{2}, Rational(1, 2));
    CHECK(dual == want);
    CHECK(direct == want);
    for (const char *name : {"P2", "elliptic"}) {
        const auto [l, r] = serre_duality_power_sum_relation(HodgeDiamond::named(name));
        CHECK(l == r);
    }
    CHECK_THROWS_AS(serre_duality_power_sum_relation(HodgeDiamond(1, {{{0, 0}, 1}, {{1, 1}, 2}})), PreconditionError);
}
