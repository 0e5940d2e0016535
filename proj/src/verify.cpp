#include "plethora/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "plethora/abc.hpp"
#include "plethora/chromatic.hpp"
#include "plethora/error.hpp"
#include "plethora/genfun.hpp"
#include "plethora/hodge.hpp"
#include "plethora/plethysm.hpp"
#include "plethora/symfun.hpp"

namespace plethora::verify {

namespace {

template <typename T>
std::string show(const T &x)
{
    std::ostringstream os;
    os << x;
    std::string s = os.str();
    std::replace(s.begin(), s.end(), '\n', ';');
    return s;
}

class Checker {
public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    template <typename T>
    void equal(const std::string &label, const T &got, const T &want)
    {
        ++result_.checks;
        if (result_.passed && !(got == want)) {
            fail(label + ": got " + show(got) + ", expected " + show(want));
        }
    }

    void truth(const std::string &label, bool ok, const std::string &detail = {})
    {
        ++result_.checks;
        if (result_.passed && !ok) {
            fail(detail.empty() ? label : label + ": " + detail);
        }
    }

    // Runs a check body and turns a thrown precondition into a recorded failure.
    void guarded(const std::string &label, const std::function<void()> &body)
    {
        try {
            body();
        } catch (const std::exception &e) {
            ++result_.checks;
            if (result_.passed) {
                fail(label + ": " + e.what());
            }
        }
    }

    SuiteResult done() { return std::move(result_); }

private:
    void fail(std::string message)
    {
        result_.passed = false;
        result_.counterexample = std::move(message);
    }

    SuiteResult result_;
};

const char *const kDiamonds[] = {"P1", "P2", "elliptic"};

BiPoly hd(const HodgeDiamond &d) { return e_polynomial(d, false); }

HodgeDiamond random_symmetric_diamond(std::mt19937 &rng, unsigned n)
{
    std::uniform_int_distribution<unsigned> mult(0, 2);
    std::map<HodgeDiamond::Index, unsigned> h;
    for (unsigned p = 0; p <= n; ++p) {
        for (unsigned q = 0; q <= p && p + q <= n; ++q) {
            const unsigned m = (p == 0 && q == 0) ? 1 : mult(rng);
            if (m == 0) {
                continue;
            }
            for (auto idx : {HodgeDiamond::Index{p, q}, {q, p}, {n - p, n - q}, {n - q, n - p}}) {
                h[idx] = m;
            }
        }
    }
    return HodgeDiamond(n, std::move(h));
}

TSeries random_series(std::mt19937 &rng, unsigned order, bool unit_constant)
{
    std::uniform_int_distribution<unsigned> n_terms(1, 3);
    std::uniform_int_distribution<unsigned> exponent(0, 2);
    std::uniform_int_distribution<unsigned> t_power(1, order);
    std::uniform_int_distribution<int> coeff(-3, 3);
    TSeries s = unit_constant ? TSeries::one(order) : TSeries(order);
    const unsigned k = n_terms(rng);
    for (unsigned i = 0; i < k; ++i) {
        const int c = coeff(rng);
        s += TSeries::monomial(order, BiPoly::monomial(exponent(rng), exponent(rng), c == 0 ? 1 : c), t_power(rng));
    }
    return s;
}

void compositions(unsigned total, unsigned parts, std::vector<unsigned> &current,
                  const std::function<void(const std::vector<unsigned> &)> &visit)
{
    if (parts == 1) {
        current.push_back(total);
        visit(current);
        current.pop_back();
        return;
    }
    for (unsigned i = 0; i <= total; ++i) {
        current.push_back(i);
        compositions(total - i, parts - 1, current, visit);
        current.pop_back();
    }
}

SuiteResult three_way(unsigned order)
{
    Checker c("three-way");
    for (const char *name : kDiamonds) {
        c.guarded(name, [&] {
            const HodgeDiamond d = HodgeDiamond::named(name);
            const BiPoly f = hd(d);
            const TSeries product = pe_product_formula(d, order);
            c.equal(std::string(name) + " hn route", pe_via_hn(f, order), product);
            c.equal(std::string(name) + " coloring route", pe_via_coloring(f, order), product);
            c.equal(std::string(name) + " definition", pe(TSeries::monomial(order, f, 1)), product);
        });
    }
    return c.done();
}

SuiteResult p1_series(unsigned order)
{
    Checker c("p1-series");
    const unsigned n = std::max(order, 5u);
    const TSeries s = pe(TSeries::monomial(n, BiPoly(1) + BiPoly::monomial(1, 1), 1));
    for (unsigned k = 0; k <= n; ++k) {
        BiPoly want;
        for (unsigned j = 0; j <= k; ++j) {
            want += BiPoly::monomial(j, j);
        }
        c.equal("t^" + std::to_string(k), s[k], want);
    }
    return c.done();
}

SuiteResult coloring_sum(unsigned)
{
    Checker c("coloring-sum");
    std::vector<std::pair<std::string, WeightedGraph>> graphs;
    for (const char *name : {"P3", "K3", "C4", "K4"}) {
        graphs.emplace_back(name, WeightedGraph::named(name));
    }
    graphs.emplace_back("P2(1,2)", WeightedGraph(2, {{0, 1}}, {1, 2}));
    const BiPoly one_uv = BiPoly(1) + BiPoly::monomial(1, 1);
    const BiPoly fs[] = {one_uv, -one_uv, BiPoly(1) - BiPoly::u() + BiPoly::monomial(1, 1, 2)};
    for (const auto &[name, g] : graphs) {
        for (const BiPoly &f : fs) {
            const std::string label = name + " f=" + f.to_string();
            c.guarded(label, [&] {
                const unsigned n = g.total_weight();
                c.equal(label, cs_coloring_sum(g, f, 1, n), pleth_concrete(csf(g), f, 1, n));
            });
        }
    }
    return c.done();
}

SuiteResult complete_graph(unsigned)
{
    Checker c("complete-graph");
    for (unsigned n = 1; n <= 6; ++n) {
        c.equal("K" + std::to_string(n), csf(WeightedGraph::complete(n)), e_to_p(n) * Rational(factorial(n)));
    }
    return c.done();
}

SuiteResult plethysm_rules(unsigned)
{
    Checker c("plethysm-rules");
    for (unsigned n = 1; n <= 8; ++n) {
        SymFun rhs;
        for (unsigned i = 1; i <= n; ++i) {
            rhs += h_to_p(n - i) * SymFun::p(i);
        }
        c.equal("Newton n=" + std::to_string(n), h_to_p(n) * Rational(static_cast<long>(n)), rhs);
    }

    const BiPoly one_uv = BiPoly(1) + BiPoly::monomial(1, 1);
    const BiPoly u_v = BiPoly::u() + BiPoly::v();
    for (unsigned n = 0; n <= 6; ++n) {
        TSeries rhs(n);
        for (unsigned k = 0; k <= n; ++k) {
            rhs += pleth_concrete(h_to_p(k), one_uv, 1, n) * pleth_concrete(h_to_p(n - k), u_v, 1, n);
        }
        c.equal("sum rule n=" + std::to_string(n), pleth_concrete(h_to_p(n), one_uv + u_v, 1, n), rhs);
    }

    const BiPoly f = BiPoly(1) + BiPoly::u();
    const BiPoly g = BiPoly::v() + BiPoly::monomial(1, 1);
    for (unsigned n = 1; n <= 4; ++n) {
        const unsigned order = 2 * n;
        TSeries rhs(order);
        for (const Partition &lambda : partitions_of(n)) {
            const SymFun s = s_to_p(lambda);
            rhs += pleth_concrete(s, f, 1, order) * pleth_concrete(s, g, 1, order);
        }
        c.equal("product rule n=" + std::to_string(n), pleth_concrete(h_to_p(n), f * g, 2, order), rhs);
    }

    const BiPoly F = BiPoly(1) + BiPoly::u() + BiPoly::monomial(1, 1);
    for (unsigned m = 1; m <= 3; ++m) {
        for (unsigned r = 0; r <= 5; ++r) {
            TSeries rhs(r);
            std::vector<unsigned> current;
            compositions(r, m, current, [&](const std::vector<unsigned> &is) {
                TSeries term = TSeries::one(r);
                for (unsigned i : is) {
                    term = term * pleth_concrete(h_to_p(i), F, 1, r);
                }
                rhs += term;
            });
            const BiPoly mF = F * Rational(static_cast<long>(m));
            c.equal("multinomial m=" + std::to_string(m) + " r=" + std::to_string(r),
                    pleth_concrete(h_to_p(r), mF, 1, r), rhs);
        }
    }

    for (unsigned r = 0; r <= 8; ++r) {
        c.equal("h_r[2] r=" + std::to_string(r), pleth_abstract(h_to_p(r), SymFun(2)),
                SymFun(static_cast<int>(r + 1)));
    }

    for (unsigned n = 1; n <= 6; ++n) {
        SymFun rhs;
        for (unsigned a = 0; a <= n; ++a) {
            rhs += pleth_abstract(h_to_p(a), SymFun::p(n)) * Rational(static_cast<long>(n - a + 1));
        }
        c.equal("h_n[p_n+2] n=" + std::to_string(n), pleth_abstract(h_to_p(n), SymFun::p(n) + SymFun(2)), rhs);
    }
    return c.done();
}

SuiteResult config(unsigned order)
{
    Checker c("config");
    for (const char *name : kDiamonds) {
        const HodgeDiamond d = HodgeDiamond::named(name);
        const BiPoly e = hd(d);
        const std::string tag(name);
        for (unsigned n = 0; n <= 4; ++n) {
            c.equal(tag + " identity n=" + std::to_string(n), equiv_config_epoly(e, CycleType::identity(n)),
                    conf_ordered_epoly(e, n));
        }

        const TSeries sign = ordered_sign_series(d, order);
        TSeries via_e(order);
        for (unsigned n = 0; n <= order; ++n) {
            via_e += pleth_concrete(e_to_p(n), e, 1, order);
        }
        c.equal(tag + " sign series = sum e_n[HD]", sign, via_e);
        c.equal(tag + " sign series at -t = PE[-HD]", sign.negate_t(), pe(TSeries::monomial(order, -e, 1)));
        c.equal(tag + " sign series at -t inverts product", sign.negate_t() * pe_product_formula(d, order),
                TSeries::one(order));

        const unsigned n_max = std::max(order, 3u);
        const TSeries unordered = unordered_config_series(d, n_max);
        for (unsigned n = 0; n <= 3; ++n) {
            c.equal(tag + " unordered t^" + std::to_string(n), unordered[n], config_symmetrization_average(e, n));
        }
    }
    // Two unordered points on P1: P2 minus the diagonal conic.
    const BiPoly p1 = hd(HodgeDiamond::named("P1"));
    const BiPoly p2 = hd(HodgeDiamond::named("P2"));
    c.equal("P1 unordered t^2 = e(P2) - e(P1)", unordered_config_series(HodgeDiamond::named("P1"), 2)[2], p2 - p1);
    return c.done();
}

SuiteResult charvar(unsigned order)
{
    Checker c("charvar");
    const unsigned n = std::max(order, 6u);
    std::mt19937 rng(20240607);
    for (int i = 0; i < 20; ++i) {
        const TSeries f = random_series(rng, n, false);
        const GeometricSeries full = charvar_full_from_irr({f, SeriesRole::irreducible}, n);
        c.equal("pl(pe(f)) #" + std::to_string(i), charvar_irr_from_full(full, n).series, f);
        const TSeries g = random_series(rng, n, true);
        const GeometricSeries irr = charvar_irr_from_full({g, SeriesRole::full}, n);
        c.equal("pe(pl(g)) #" + std::to_string(i), charvar_full_from_irr(irr, n).series, g);
    }
    return c.done();
}

SuiteResult abc(unsigned)
{
    Checker c("abc");
    for (unsigned s = 0; s <= 8; ++s) {
        const BiPoly a = s == 0 ? BiPoly(2) : BiPoly::monomial(s, 0) + BiPoly::monomial(0, s);
        const BiPoly t = BiPoly(1) + BiPoly::monomial(s, s);
        c.equal("A_" + std::to_string(s), abc_sequence(s, ABCSequence::A).expand(), ZPoly(a, s));
        c.equal("T_" + std::to_string(s), abc_sequence(s, ABCSequence::T).expand(), ZPoly(t, s));
    }
    for (unsigned n = 0; n <= 5; ++n) {
        for (unsigned p = 0; p <= n; ++p) {
            for (unsigned q = 0; q <= p && p + q <= n; ++q) {
                c.equal("R_" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(n),
                        r_generator_abc(p, q, n).expand(), ZPoly(r_generator(p, q, n)));
            }
        }
    }
    std::vector<std::pair<std::string, HodgeDiamond>> diamonds;
    for (const char *name : kDiamonds) {
        diamonds.emplace_back(name, HodgeDiamond::named(name));
    }
    std::mt19937 rng(7);
    diamonds.emplace_back("random n=3", random_symmetric_diamond(rng, 3));
    for (const auto &[name, d] : diamonds) {
        c.equal(name + " round trip", abc_decompose(d).expand(), ZPoly(hd(d), d.dim()));
    }
    c.equal("birational P2", birational_reduce(abc_decompose(HodgeDiamond::named("P2"))), ABCPoly::A().pow(2));
    return c.done();
}

SuiteResult csf_basis(unsigned)
{
    Checker c("csf-basis");
    for (const char *family_name : {"complete", "path"}) {
        for (unsigned d = 1; d <= 5; ++d) {
            const std::string label = std::string(family_name) + " d=" + std::to_string(d);
            c.guarded(label, [&] {
                const std::vector<WeightedGraph> family = graph_family(family_name, d);
                const CsfBasisMatrix m = csf_basis_matrix(family, d);
                c.truth(label + " square", m.rows.size() == m.cols.size());
                const auto coeffs = h_in_csf_basis(d, family);
                SymFun sum;
                for (const auto &[lambda, coeff] : coeffs) {
                    sum += csf_of_union(family, lambda) * coeff;
                }
                c.equal(label + " round trip", sum, h_to_p(d));
            });
        }
    }
    return c.done();
}

SuiteResult serre_duality(unsigned)
{
    Checker c("serre-duality");
    for (const char *name : {"P1", "P2", "elliptic", "empty"}) {
        const auto [dual, direct] = serre_duality_power_sum_relation(HodgeDiamond::named(name));
        c.equal(std::string(name), dual, direct);
    }
    c.equal("uv^2 + u^2v", two_var_power_sum_expand(BiPoly::monomial(1, 2) + BiPoly::monomial(2, 1)),
            SymFun(Partition{2, 1}) - SymFun::p(3));
    return c.done();
}

SuiteResult generators(unsigned order)
{
    Checker c("generators");
    std::vector<std::pair<std::string, HodgeDiamond>> diamonds;
    for (const char *name : kDiamonds) {
        diamonds.emplace_back(name, HodgeDiamond::named(name));
    }
    std::mt19937 rng(11);
    for (unsigned n = 1; n <= 3; ++n) {
        diamonds.emplace_back("random n=" + std::to_string(n), random_symmetric_diamond(rng, n));
    }
    for (const auto &[name, d] : diamonds) {
        c.guarded(name, [&] {
            c.equal(name, pe_via_generators(d, order), pe_via_hn(hd(d), d.dim(), order));
        });
    }
    return c.done();
}

using SuiteFn = SuiteResult (*)(unsigned);

const std::vector<std::pair<std::string, SuiteFn>> &registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"three-way", three_way},
        {"p1-series", p1_series},
        {"coloring-sum", coloring_sum},
        {"complete-graph", complete_graph},
        {"plethysm-rules", plethysm_rules},
        {"config", config},
        {"charvar", charvar},
        {"abc", abc},
        {"csf-basis", csf_basis},
        {"serre-duality", serre_duality},
        {"generators", generators},
    };
    return suites;
}

} // namespace

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> r;
        for (const auto &entry : registry()) {
            r.push_back(entry.first);
        }
        return r;
    }();
    return names;
}

SuiteResult run_suite(const std::string &name, unsigned order)
{
    for (const auto &[suite, fn] : registry()) {
        if (suite == name) {
            return fn(order);
        }
    }
    throw PreconditionError("unknown verification suite '" + name + "'");
}

std::vector<SuiteResult> run_all(unsigned order)
{
    std::vector<SuiteResult> r;
    for (const auto &[suite, fn] : registry()) {
        r.push_back(fn(order));
    }
    return r;
}

} // namespace plethora::verify
