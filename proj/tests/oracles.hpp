// Independent reference computations and random generators used only by tests.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "plethora/bipoly.hpp"
#include "plethora/graph.hpp"
#include "plethora/hodge.hpp"
#include "plethora/symfun.hpp"
#include "plethora/tseries.hpp"

namespace oracle {

using plethora::BigInt;
using plethora::BiPoly;
using plethora::Partition;
using plethora::Rational;
using plethora::SymFun;
using plethora::TSeries;

// Number of partitions of n by the coin-change recurrence.
inline unsigned long partition_count(unsigned n)
{
    std::vector<unsigned long> ways(n + 1, 0);
    ways[0] = 1;
    for (unsigned part = 1; part <= n; ++part) {
        for (unsigned s = part; s <= n; ++s) {
            ways[s] += ways[s - part];
        }
    }
    return ways[n];
}

// Chromatic polynomial at k by deletion-contraction on an adjacency-set multigraph-free representation.
inline BigInt deletion_contraction(std::vector<std::set<unsigned>> adj, long k)
{
    for (unsigned a = 0; a < adj.size(); ++a) {
        if (adj[a].empty()) {
            continue;
        }
        const unsigned b = *adj[a].begin();
        auto deleted = adj;
        deleted[a].erase(b);
        deleted[b].erase(a);
        // Contract b into a, then drop b by relabelling the last vertex into its slot.
        auto contracted = deleted;
        for (unsigned x : contracted[b]) {
            contracted[x].erase(b);
            if (x != a) {
                contracted[x].insert(a);
                contracted[a].insert(x);
            }
        }
        contracted[b].clear();
        const unsigned last = static_cast<unsigned>(contracted.size() - 1);
        if (b != last) {
            for (unsigned x : contracted[last]) {
                contracted[x].erase(last);
                contracted[x].insert(b);
            }
            contracted[b] = contracted[last];
        }
        contracted.pop_back();
        return deletion_contraction(deleted, k) - deletion_contraction(contracted, k);
    }
    BigInt r = 1;
    for (std::size_t i = 0; i < adj.size(); ++i) {
        r *= k;
    }
    return r;
}

inline BigInt deletion_contraction(const plethora::WeightedGraph &g, long k)
{
    std::vector<std::set<unsigned>> adj(g.n_vertices());
    for (const auto &[i, j] : g.edges()) {
        adj[i].insert(j);
        adj[j].insert(i);
    }
    return deletion_contraction(adj, k);
}

// Power-sum symmetric function evaluated at finitely many numeric variables.
inline Rational evaluate(const SymFun &f, const std::vector<Rational> &x)
{
    Rational total;
    for (const auto &[lambda, c] : f.terms()) {
        Rational term = c;
        for (unsigned part : lambda.parts()) {
            Rational p;
            for (const auto &xi : x) {
                Rational power(1);
                for (unsigned i = 0; i < part; ++i) {
                    power *= xi;
                }
                p += power;
            }
            term *= p;
        }
        total += term;
    }
    return total;
}

// Schur polynomial by summing over semistandard tableaux with entries < x.size().
inline Rational schur_ssyt(const Partition &lambda, const std::vector<Rational> &x)
{
    const auto &rows = lambda.parts();
    std::vector<std::vector<unsigned>> t;
    for (unsigned r : rows) {
        t.emplace_back(r, 0);
    }
    std::vector<std::pair<unsigned, unsigned>> cells;
    for (unsigned i = 0; i < rows.size(); ++i) {
        for (unsigned j = 0; j < rows[i]; ++j) {
            cells.emplace_back(i, j);
        }
    }
    Rational total;
    std::function<void(std::size_t)> fill = [&](std::size_t idx) {
        if (idx == cells.size()) {
            Rational w(1);
            for (const auto &row : t) {
                for (unsigned e : row) {
                    w *= x[e];
                }
            }
            total += w;
            return;
        }
        const auto [i, j] = cells[idx];
        unsigned lo = 0;
        if (j > 0) {
            lo = t[i][j - 1];
        }
        if (i > 0) {
            lo = std::max(lo, t[i - 1][j] + 1);
        }
        for (unsigned e = lo; e < x.size(); ++e) {
            t[i][j] = e;
            fill(idx + 1);
        }
    };
    fill(0);
    return total;
}

// k-th elementary symmetric polynomial by subset enumeration.
inline Rational elementary_bruteforce(unsigned k, const std::vector<Rational> &x)
{
    Rational total;
    const unsigned n = static_cast<unsigned>(x.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != k) {
            continue;
        }
        Rational w(1);
        for (unsigned i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                w *= x[i];
            }
        }
        total += w;
    }
    return total;
}

// Cycle type of a permutation given in one-line notation.
inline Partition cycle_type(const std::vector<unsigned> &perm)
{
    std::vector<bool> seen(perm.size(), false);
    std::vector<unsigned> lengths;
    for (unsigned i = 0; i < perm.size(); ++i) {
        unsigned len = 0;
        for (unsigned j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len > 0) {
            lengths.push_back(len);
        }
    }
    return Partition(lengths);
}

// Naive series product of geometric and binomial factors (1 - m t^k)^e.
inline TSeries naive_product(const std::vector<std::tuple<BiPoly, unsigned, long>> &factors, unsigned order)
{
    TSeries r = TSeries::one(order);
    for (const auto &[m, k, e] : factors) {
        TSeries f(order);
        // (1 - x)^e = sum_j binom(e, j) (-x)^j
        for (unsigned j = 0; j * k <= order; ++j) {
            Rational c = plethora::binomial(e, j);
            if (j % 2 == 1) {
                c = -c;
            }
            f += TSeries::monomial(order, m.pow(j) * c, j * k);
        }
        r = r * f;
    }
    return r;
}

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational()
    {
        const int den = integer(1, 4);
        return Rational(integer(-5, 5), den);
    }

    BiPoly bipoly(unsigned max_terms = 4, unsigned max_exp = 3, bool integral = false)
    {
        BiPoly p;
        const int n = integer(0, static_cast<int>(max_terms));
        for (int i = 0; i < n; ++i) {
            const Rational c = integral ? Rational(integer(-3, 3)) : rational();
            p += BiPoly::monomial(integer(0, max_exp), integer(0, max_exp), c);
        }
        return p;
    }

    BiPoly symmetric_bipoly(unsigned max_deg)
    {
        BiPoly p;
        for (int i = integer(1, 4); i > 0; --i) {
            const unsigned a = integer(0, max_deg);
            const unsigned b = integer(0, max_deg - a);
            const Rational c = rational();
            p += BiPoly::monomial(a, b, c);
            if (a != b) {
                p += BiPoly::monomial(b, a, c);
            }
        }
        return p;
    }

    TSeries series(unsigned order, bool constant_one)
    {
        TSeries s = constant_one ? TSeries::one(order) : TSeries(order);
        for (unsigned k = 1; k <= order; ++k) {
            if (integer(0, 2) > 0) {
                s += TSeries::monomial(order, bipoly(2, 2), k);
            }
        }
        return s;
    }

    SymFun symfun(unsigned max_deg, unsigned max_terms = 3)
    {
        SymFun f;
        for (int i = integer(0, static_cast<int>(max_terms)); i > 0; --i) {
            std::vector<unsigned> parts;
            unsigned left = integer(0, max_deg);
            while (left > 0) {
                const unsigned p = integer(1, left);
                parts.push_back(p);
                left -= p;
            }
            f += SymFun(Partition(parts), rational());
        }
        return f;
    }

    plethora::WeightedGraph graph(unsigned n, bool weighted = false)
    {
        std::vector<plethora::WeightedGraph::Edge> edges;
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i + 1; j < n; ++j) {
                if (integer(0, 1) == 1) {
                    edges.emplace_back(i, j);
                }
            }
        }
        std::vector<unsigned> weights;
        if (weighted) {
            for (unsigned i = 0; i < n; ++i) {
                weights.push_back(integer(1, 2));
            }
        }
        return plethora::WeightedGraph(n, edges, weights);
    }

    plethora::HodgeDiamond symmetric_diamond(unsigned n)
    {
        std::map<plethora::HodgeDiamond::Index, unsigned> h;
        for (unsigned p = 0; p <= n; ++p) {
            for (unsigned q = 0; q <= p && p + q <= n; ++q) {
                const unsigned m = integer(0, 2);
                if (m == 0) {
                    continue;
                }
                for (auto idx : {plethora::HodgeDiamond::Index{p, q}, {q, p}, {n - p, n - q}, {n - q, n - p}}) {
                    h[idx] = m;
                }
            }
        }
        return plethora::HodgeDiamond(n, h);
    }

    template <typename T>
    void shuffle(std::vector<T> &v)
    {
        std::shuffle(v.begin(), v.end(), rng_);
    }

private:
    std::mt19937 rng_;
};

} // namespace oracle
