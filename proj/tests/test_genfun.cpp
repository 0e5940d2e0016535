#include "doctest.h"
#include "oracles.hpp"

#include "plethora/chromatic.hpp"
#include "plethora/error.hpp"
#include "plethora/genfun.hpp"
#include "plethora/plethysm.hpp"

using namespace plethora;

namespace {

BiPoly poly(const char *s) { return BiPoly::parse(s); }

TSeries geometric(unsigned order, const BiPoly &x)
{
    TSeries s(order);
    for (unsigned k = 0; k <= order; ++k) {
        s += TSeries::monomial(order, x.pow(k), k);
    }
    return s;
}

// Coefficient of t^n in PE[f t] for f with nonnegative integer coefficients:
// the sum over all size-n multisets drawn from the monomials of f, each repeated by its coefficient.
BiPoly multiset_count(const BiPoly &f, unsigned n)
{
    std::vector<BiPoly> letters;
    for (const auto &[m, c] : f.terms()) {
        for (long i = 0; i < c.numerator().get_si(); ++i) {
            letters.push_back(BiPoly::monomial(m.a, m.b));
        }
    }
    BiPoly total;
    std::function<void(std::size_t, unsigned, BiPoly)> pick = [&](std::size_t from, unsigned left, BiPoly acc) {
        if (left == 0) {
            total += acc;
            return;
        }
        for (std::size_t i = from; i < letters.size(); ++i) {
            pick(i, left - 1, acc * letters[i]);
        }
    };
    pick(0, n, BiPoly(1));
    return total;
}

BiPoly average_over_symmetric_group(const BiPoly &e, unsigned n)
{
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    BiPoly total;
    do {
        total += equiv_config_epoly(e, CycleType(oracle::cycle_type(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total * Rational(BigInt(1), factorial(n));
}

} // namespace

TEST_CASE("pe examples")
{
    CHECK(pe(TSeries(3)) == TSeries::one(3));
    const TSeries s = pe(TSeries::monomial(2, poly("1 + u*v"), 1));
    CHECK(s[1] == poly("1 + u*v"));
    CHECK(s[2] == poly("1 + u*v + u^2*v^2"));
    CHECK(pe(TSeries::monomial(3, BiPoly(1), 1)) == geometric(3, BiPoly(1)));
    CHECK_THROWS_AS(pe(TSeries::one(2)), PreconditionError);
}

TEST_CASE("pe counts multisets")
{
    oracle::Gen gen(51);
    for (int i = 0; i < 10; ++i) {
        BiPoly f;
        for (int k = gen.integer(1, 3); k > 0; --k) {
            f += BiPoly::monomial(gen.integer(0, 2), gen.integer(0, 2), gen.integer(1, 2));
        }
        const TSeries s = pe(TSeries::monomial(4, f, 1));
        for (unsigned n = 0; n <= 4; ++n) {
            CHECK(s[n] == multiset_count(f, n));
        }
    }
}

TEST_CASE("pe is a homomorphism and pl inverts it")
{
    oracle::Gen gen(52);
    for (int i = 0; i < 20; ++i) {
        const TSeries f = gen.series(6, false), g = gen.series(6, false);
        CHECK(pe(f + g) == pe(f) * pe(g));
        CHECK(pl(pe(f)) == f);
        const TSeries h = gen.series(6, true);
        CHECK(pe(pl(h)) == h);
    }
    CHECK(pl(TSeries::one(4)) == TSeries(4));
    CHECK(pl(geometric(5, BiPoly(1))) == TSeries::monomial(5, BiPoly(1), 1));
    CHECK_THROWS_AS(pl(TSeries(3)), PreconditionError);
}

TEST_CASE("product formula")
{
    const TSeries p1 = pe_product_formula(HodgeDiamond::named("P1"), 5);
    for (unsigned k = 0; k <= 5; ++k) {
        BiPoly want;
        for (unsigned j = 0; j <= k; ++j) {
            want += BiPoly::monomial(j, j);
        }
        CHECK(p1[k] == want);
    }
    CHECK(pe_product_formula(HodgeDiamond::named("empty"), 3) == TSeries::one(3));
    const TSeries p2 = pe_product_formula(HodgeDiamond::named("P2"), 2);
    CHECK(p2[2] == multiset_count(poly("1 + u*v + u^2*v^2"), 2));
}

TEST_CASE("three routes to pe agree")
{
    for (const char *name : {"P1", "P2", "elliptic"}) {
        const HodgeDiamond d = HodgeDiamond::named(name);
        const BiPoly f = e_polynomial(d, false);
        for (unsigned order = 0; order <= 4; ++order) {
            const TSeries product = pe_product_formula(d, order);
            CHECK(pe_via_hn(f, order) == product);
            CHECK(pe_via_coloring(f, order) == product);
        }
    }
    CHECK(pe_via_hn(BiPoly(), 3) == TSeries::one(3));
    const BiPoly e = poly("1 + u + v + u*v");
    CHECK(pe_via_hn(e, 3) == pe(TSeries::monomial(3, e, 1)));
    oracle::Gen gen(53);
    for (int i = 0; i < 10; ++i) {
        const BiPoly f = gen.bipoly(3, 2, true);
        CAPTURE(f.to_string());
        CHECK(pe_via_coloring(f, 3) == pe(TSeries::monomial(3, f, 1)));
        CHECK(pe_via_hn(f, 2, 4) == pe(TSeries::monomial(4, f, 2)));
        CHECK(pe_via_coloring(f, 2, 4) == pe_via_hn(f, 2, 4));
    }
    CHECK_THROWS_AS(pe_via_coloring(poly("u/2"), 2), PreconditionError);
}

TEST_CASE("generator closure")
{
    oracle::Gen gen(54);
    for (int i = 0; i < 10; ++i) {
        const HodgeDiamond d = gen.symmetric_diamond(gen.integer(1, 3));
        if (d.empty()) {
            continue;
        }
        CHECK(pe_via_generators(d, 4) == pe_via_hn(e_polynomial(d, false), d.dim(), 4));
    }
    CHECK(pe_via_generators(HodgeDiamond::named("P1"), 4) == pe_product_formula(HodgeDiamond::named("P1"), 4));
    CHECK(pe_via_generators(HodgeDiamond::named("elliptic"), 4) ==
          pe_product_formula(HodgeDiamond::named("elliptic"), 4));
}

TEST_CASE("Moebius and alpha_j")
{
    const int mu[] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (unsigned n = 1; n <= 12; ++n) {
        CHECK(mobius(n) == mu[n]);
    }
    const BiPoly e = poly("1 + u*v");
    CHECK(alpha_j(e, 1) == e);
    CHECK(alpha_j(e, 2) == poly("u^2*v^2 - u*v"));
    CHECK(alpha_j(e, 4) == substitute_powers(e, 4) - substitute_powers(e, 2));
}

TEST_CASE("ordered configuration spaces")
{
    const BiPoly e = poly("1 + u*v");
    CHECK(conf_ordered_epoly(e, 0) == BiPoly(1));
    CHECK(conf_ordered_epoly(e, 1) == e);
    CHECK(conf_ordered_epoly(e, 2) == poly("u*v + u^2*v^2"));
    CHECK(equiv_config_epoly(e, CycleType(Partition{2})) == alpha_j(e, 2));
    CHECK(equiv_config_epoly(e, CycleType(Partition{2, 1})) == e * poly("u^2*v^2 - u*v"));
    oracle::Gen gen(55);
    for (int i = 0; i < 10; ++i) {
        const BiPoly f = gen.bipoly(3, 2, true);
        for (unsigned n = 0; n <= 4; ++n) {
            CHECK(equiv_config_epoly(f, CycleType::identity(n)) == conf_ordered_epoly(f, n));
        }
    }
    CHECK(CycleType(Partition{2, 2, 1}).class_size() == 15);
    CHECK(CycleType(Partition{3, 1}).n() == 4);
    CHECK_THROWS_AS(CycleType(std::map<unsigned, unsigned>{{0, 1}}), PreconditionError);
}

TEST_CASE("sign series")
{
    const TSeries s = ordered_sign_series(HodgeDiamond::named("P1"), 2);
    CHECK(s[1] == poly("1 + u*v"));
    CHECK(s[2] == poly("u*v"));
    CHECK(ordered_sign_series(HodgeDiamond::named("empty"), 3) == TSeries::one(3));
    for (const char *name : {"P1", "P2", "elliptic"}) {
        const HodgeDiamond d = HodgeDiamond::named(name);
        const BiPoly e = e_polynomial(d, false);
        const unsigned order = 3;
        const TSeries sign = ordered_sign_series(d, order);
        TSeries alternating(order), colorings(order);
        for (unsigned n = 0; n <= order; ++n) {
            TSeries term = pleth_concrete(e_to_p(n), e, 1, order);
            alternating += n % 2 == 0 ? term : -term;
            // positive-sign coloring sums on K_n give n! e_n[e]
            if (n > 0) {
                colorings += cs_coloring_sum(WeightedGraph::complete(n), e, 1, order) * Rational(BigInt(1), factorial(n));
            }
        }
        colorings += TSeries::one(order);
        CHECK(sign.negate_t() == alternating);
        CHECK(sign == colorings);
        CHECK(sign.negate_t() == pe(TSeries::monomial(order, -e, 1)));
        CHECK(sign.negate_t() * pe_product_formula(d, order) == TSeries::one(order));
    }
}

TEST_CASE("unordered configuration series")
{
    const HodgeDiamond p1 = HodgeDiamond::named("P1");
    const TSeries s = unordered_config_series(p1, 3);
    CHECK(s[1] == poly("1 + u*v"));
    // two unordered distinct points on P1: P2 minus the diagonal conic
    CHECK(s[2] == poly("u^2*v^2"));
    CHECK(unordered_config_series(HodgeDiamond::named("empty"), 3) == TSeries::one(3));
    oracle::Gen gen(56);
    std::vector<HodgeDiamond> diamonds = {p1, HodgeDiamond::named("P2"), HodgeDiamond::named("elliptic")};
    for (int i = 0; i < 4; ++i) {
        diamonds.push_back(gen.symmetric_diamond(gen.integer(1, 3)));
    }
    diamonds.push_back(HodgeDiamond(1, {{{0, 0}, 2}, {{1, 1}, 3}}));
    for (const auto &d : diamonds) {
        const BiPoly e = e_polynomial(d, false);
        const TSeries u = unordered_config_series(d, 3);
        for (unsigned n = 0; n <= 3; ++n) {
            const BiPoly avg = average_over_symmetric_group(e, n);
            CHECK(config_symmetrization_average(e, n) == avg);
            CHECK(u[n] == avg);
        }
    }
}

TEST_CASE("character variety series")
{
    const unsigned order = 4;
    CHECK(charvar_full_from_irr({TSeries(order), SeriesRole::irreducible}, order).series == TSeries::one(order));
    const GeometricSeries full = charvar_full_from_irr({TSeries::monomial(order, poly("1 + u*v"), 1), SeriesRole::irreducible}, order);
    CHECK(full.role == SeriesRole::full);
    CHECK(full.series == pe_product_formula(HodgeDiamond::named("P1"), order));
    CHECK(charvar_irr_from_full({TSeries::one(order), SeriesRole::full}, order).series == TSeries(order));
    const GeometricSeries irr = charvar_irr_from_full({geometric(order, BiPoly(1)), SeriesRole::full}, order);
    CHECK(irr.role == SeriesRole::irreducible);
    CHECK(irr.series == TSeries::monomial(order, BiPoly(1), 1));
    CHECK_THROWS_AS(charvar_full_from_irr({TSeries::one(order), SeriesRole::irreducible}, order), PreconditionError);
    CHECK_THROWS_AS(charvar_irr_from_full({TSeries(order), SeriesRole::full}, order), PreconditionError);
    CHECK_THROWS_AS(charvar_irr_from_full({TSeries::one(2), SeriesRole::full}, 3), PreconditionError);
    oracle::Gen gen(57);
    for (int i = 0; i < 20; ++i) {
        const TSeries f = gen.series(6, false);
        CHECK(charvar_irr_from_full(charvar_full_from_irr({f, SeriesRole::irreducible}, 6), 6).series == f);
    }
}
