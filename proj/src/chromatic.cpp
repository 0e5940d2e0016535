#include "plethora/chromatic.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "plethora/error.hpp"

namespace plethora {

std::uint64_t max_states()
{
    constexpr std::uint64_t kDefault = 10'000'000;
    const char *env = std::getenv("PLETHORA_MAX_STATES");
    if (env == nullptr || *env == '\0') {
        return kDefault;
    }
    try {
        return std::stoull(env);
    } catch (const std::exception &) {
        throw PreconditionError(std::string("PLETHORA_MAX_STATES is not a number: ") + env);
    }
}

SymFun csf(const WeightedGraph &g)
{
    const auto &edges = g.edges();
    if (edges.size() > kMaxCsfEdges) {
        throw GuardError("csf: 2^" + std::to_string(edges.size()) + " edge subsets exceeds the 2^" +
                         std::to_string(kMaxCsfEdges) + " limit");
    }
    const unsigned n = g.n_vertices();
    std::map<Partition, BigInt> acc;
    std::vector<unsigned> parent(n);
    std::vector<unsigned> block_weight(n);
    const std::uint64_t subsets = std::uint64_t{1} << edges.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::iota(parent.begin(), parent.end(), 0U);
        auto find = [&](unsigned x) {
            while (parent[x] != x) {
                x = parent[x] = parent[parent[x]];
            }
            return x;
        };
        unsigned size = 0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (mask & (std::uint64_t{1} << e)) {
                ++size;
                const unsigned a = find(edges[e].first);
                const unsigned b = find(edges[e].second);
                if (a != b) {
                    parent[a] = b;
                }
            }
        }
        std::fill(block_weight.begin(), block_weight.end(), 0U);
        for (unsigned v = 0; v < n; ++v) {
            block_weight[find(v)] += g.weights()[v];
        }
        std::vector<unsigned> parts;
        for (unsigned w : block_weight) {
            if (w > 0) {
                parts.push_back(w);
            }
        }
        acc[Partition(std::move(parts))] += (size % 2 == 0) ? 1 : -1;
    }
    SymFun r;
    for (const auto &[lambda, c] : acc) {
        r += SymFun(lambda, Rational(c));
    }
    return r;
}

KVarPoly csf_bruteforce(const WeightedGraph &g, unsigned k)
{
    require(k >= 1, "csf_bruteforce needs at least one color");
    const unsigned n = g.n_vertices();
    BigInt count;
    mpz_ui_pow_ui(count.get_mpz_t(), k, n);
    if (count > BigInt(std::to_string(max_states()), 10)) {
        throw GuardError("csf_bruteforce: " + std::to_string(k) + "^" + std::to_string(n) + " colorings exceeds the " +
                         std::to_string(max_states()) + " state limit");
    }
    KVarPoly result{k, {}};
    std::vector<unsigned> color(n, 0);
    while (true) {
        const bool proper = std::all_of(g.edges().begin(), g.edges().end(),
                                        [&](const auto &e) { return color[e.first] != color[e.second]; });
        if (proper) {
            std::vector<unsigned> exps(k, 0);
            for (unsigned v = 0; v < n; ++v) {
                exps[color[v]] += g.weights()[v];
            }
            result.terms[exps] += Rational(1);
        }
        unsigned pos = 0;
        while (pos < n && ++color[pos] == k) {
            color[pos++] = 0;
        }
        if (pos == n) {
            break;
        }
    }
    return result;
}

KVarPoly specialize(const SymFun &f, unsigned k)
{
    auto multiply = [k](const std::map<std::vector<unsigned>, Rational> &a,
                        const std::map<std::vector<unsigned>, Rational> &b) {
        std::map<std::vector<unsigned>, Rational> r;
        for (const auto &[ea, ca] : a) {
            for (const auto &[eb, cb] : b) {
                std::vector<unsigned> e(k);
                for (unsigned i = 0; i < k; ++i) {
                    e[i] = ea[i] + eb[i];
                }
                r[e] += ca * cb;
            }
        }
        return r;
    };
    KVarPoly result{k, {}};
    for (const auto &[lambda, c] : f.terms()) {
        std::map<std::vector<unsigned>, Rational> term{{std::vector<unsigned>(k, 0), c}};
        for (unsigned part : lambda.parts()) {
            std::map<std::vector<unsigned>, Rational> power_sum;
            for (unsigned i = 0; i < k; ++i) {
                std::vector<unsigned> e(k, 0);
                e[i] = part;
                power_sum[e] = Rational(1);
            }
            term = multiply(term, power_sum);
        }
        for (const auto &[e, c2] : term) {
            result.terms[e] += c2;
        }
    }
    std::erase_if(result.terms, [](const auto &kv) { return kv.second.is_zero(); });
    return result;
}

BigInt chromatic_polynomial(const WeightedGraph &g, long k)
{
    BigInt total = 0;
    const SymFun x = csf(g);
    for (const auto &[lambda, c] : x.terms()) {
        BigInt power = 1;
        for (std::size_t i = 0; i < lambda.length(); ++i) {
            power *= BigInt(k);
        }
        total += c.numerator() * power;
    }
    return total;
}

std::vector<AcyclicOrientation> acyclic_orientations(const WeightedGraph &g)
{
    const unsigned n = g.n_vertices();
    const auto &edges = g.edges();
    const std::uint64_t limit = max_states();
    std::vector<std::vector<unsigned>> out(n);
    std::vector<std::pair<unsigned, unsigned>> arcs;
    std::vector<AcyclicOrientation> result;

    std::vector<char> seen(n);
    auto reaches = [&](unsigned from, unsigned to) {
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<unsigned> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            const unsigned x = stack.back();
            stack.pop_back();
            if (x == to) {
                return true;
            }
            for (unsigned y : out[x]) {
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        return false;
    };

    std::function<void(std::size_t)> extend = [&](std::size_t e) {
        if (e == edges.size()) {
            if (result.size() >= limit) {
                throw GuardError("acyclic_orientations: more than " + std::to_string(limit) + " orientations");
            }
            result.push_back({arcs});
            return;
        }
        const auto [i, j] = edges[e];
        for (const auto &[from, to] : {std::pair{i, j}, std::pair{j, i}}) {
            if (reaches(to, from)) {
                continue;
            }
            out[from].push_back(to);
            arcs.emplace_back(from, to);
            extend(e + 1);
            arcs.pop_back();
            out[from].pop_back();
        }
    };
    extend(0);
    return result;
}

SignedVarList var_multiset(const BiPoly &f, unsigned t_power)
{
    SignedVarList vars;
    for (const auto &[m, c] : f.terms()) {
        require(c.is_integer(), "var_multiset requires integer coefficients, got " + c.to_string());
        const BigInt magnitude = abs(c.numerator());
        require(magnitude.fits_uint_p(), "coefficient too large for a variable multiset");
        const unsigned copies = static_cast<unsigned>(magnitude.get_ui());
        for (unsigned k = 0; k < copies; ++k) {
            vars.push_back({m, t_power, c.sign(), k});
        }
    }
    return vars;
}

namespace {

struct MonomialKey {
    unsigned a;
    unsigned b;
    unsigned t;
    auto operator<=>(const MonomialKey &) const = default;
};

} // namespace

TSeries cs_coloring_sum(const WeightedGraph &g, const SignedVarList &alphabet, unsigned order)
{
    const unsigned n = g.n_vertices();
    const std::size_t letters = alphabet.size();
    const std::uint64_t limit = max_states();
    std::uint64_t states = 0;

    std::map<MonomialKey, BigInt> acc;
    std::vector<std::size_t> kappa(n);

    for (const auto &orientation : acyclic_orientations(g)) {
        std::vector<std::vector<unsigned>> in(n);
        std::vector<unsigned> indegree(n, 0);
        std::vector<std::vector<unsigned>> out(n);
        for (const auto &[a, b] : orientation.arcs) {
            in[b].push_back(a);
            out[a].push_back(b);
            ++indegree[b];
        }
        // Kahn order; every in-neighbour is colored before its target.
        std::vector<unsigned> topo;
        std::vector<unsigned> ready;
        for (unsigned v = n; v-- > 0;) {
            if (indegree[v] == 0) {
                ready.push_back(v);
            }
        }
        while (!ready.empty()) {
            const unsigned v = ready.back();
            ready.pop_back();
            topo.push_back(v);
            for (unsigned w : out[v]) {
                if (--indegree[w] == 0) {
                    ready.push_back(w);
                }
            }
        }

        std::function<void(std::size_t, MonomialKey, int)> assign = [&](std::size_t pos, MonomialKey mono, int sign) {
            if (pos == n) {
                if (++states > limit) {
                    throw GuardError("cs_coloring_sum: more than " + std::to_string(limit) +
                                     " (orientation, coloring) pairs");
                }
                acc[mono] += sign;
                return;
            }
            const unsigned v = topo[pos];
            std::size_t lower = 0;
            for (unsigned a : in[v]) {
                const std::size_t bound = kappa[a] + (alphabet[kappa[a]].sign > 0 ? 1 : 0);
                lower = std::max(lower, bound);
            }
            const unsigned w = g.weights()[v];
            for (std::size_t idx = lower; idx < letters; ++idx) {
                const SignedVar &x = alphabet[idx];
                kappa[v] = idx;
                MonomialKey next{mono.a + x.monomial.a * w, mono.b + x.monomial.b * w, mono.t + x.t_power * w};
                if (next.t > order) {
                    continue;
                }
                assign(pos + 1, next, x.sign > 0 ? sign : -sign);
            }
        };
        assign(0, MonomialKey{0, 0, 0}, 1);
    }

    TSeries result(order);
    std::vector<BiPoly> coeffs(order + 1);
    for (const auto &[key, c] : acc) {
        if (c != 0) {
            coeffs[key.t] += BiPoly::monomial(key.a, key.b, Rational(c));
        }
    }
    return TSeries(order, std::move(coeffs));
}

TSeries cs_coloring_sum(const WeightedGraph &g, const BiPoly &f, unsigned t_power, unsigned order)
{
    return cs_coloring_sum(g, var_multiset(f, t_power), order);
}

Rational CsfBasisMatrix::at(const Partition &row, const Partition &col) const
{
    const auto r = std::find(rows.begin(), rows.end(), row);
    const auto c = std::find(cols.begin(), cols.end(), col);
    require(r != rows.end() && c != cols.end(), "partition not indexed by this basis matrix");
    return entries[static_cast<std::size_t>(r - rows.begin())][static_cast<std::size_t>(c - cols.begin())];
}

namespace {

void check_family(std::span<const WeightedGraph> family, unsigned degree)
{
    require(family.size() >= degree, "graph family needs a member for every vertex count up to " +
                                         std::to_string(degree));
    for (unsigned k = 1; k <= degree; ++k) {
        const auto &g = family[k - 1];
        require(g.n_vertices() == k, "family member " + std::to_string(k) + " must have " + std::to_string(k) +
                                         " vertices");
        require(g.is_connected(), "family member " + std::to_string(k) + " is not connected");
    }
}

// Solves A x = b exactly by Gauss-Jordan elimination; rejects singular A.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) {
            ++pivot;
        }
        require(pivot < n, "chromatic basis matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const Rational inv = Rational(1) / a[col][col];
        for (std::size_t j = col; j < n; ++j) {
            a[col][j] *= inv;
        }
        b[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) {
                continue;
            }
            const Rational factor = a[row][col];
            for (std::size_t j = col; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
            }
            b[row] -= factor * b[col];
        }
    }
    return b;
}

} // namespace

SymFun csf_of_union(std::span<const WeightedGraph> family, const Partition &lambda)
{
    SymFun r(1);
    for (unsigned part : lambda.parts()) {
        require(part <= family.size(), "graph family too short for " + lambda.to_string());
        r = r * csf(family[part - 1]);
    }
    return r;
}

CsfBasisMatrix csf_basis_matrix(std::span<const WeightedGraph> family, unsigned degree)
{
    check_family(family, degree);
    CsfBasisMatrix m;
    m.degree = degree;
    m.rows = partitions_of(degree);
    m.cols = m.rows;
    std::map<unsigned, SymFun> cache;
    for (const auto &lambda : m.rows) {
        SymFun x(1);
        for (unsigned part : lambda.parts()) {
            auto it = cache.find(part);
            if (it == cache.end()) {
                it = cache.emplace(part, csf(family[part - 1])).first;
            }
            x = x * it->second;
        }
        std::vector<Rational> row;
        row.reserve(m.cols.size());
        for (const auto &mu : m.cols) {
            row.push_back(x.coeff(mu));
        }
        m.entries.push_back(std::move(row));
    }
    // Singular matrices are rejected here rather than at first use.
    solve(m.entries, std::vector<Rational>(m.rows.size()));
    return m;
}

std::map<Partition, Rational> h_in_csf_basis(unsigned n, std::span<const WeightedGraph> family)
{
    const CsfBasisMatrix m = csf_basis_matrix(family, n);
    const std::size_t size = m.rows.size();
    // sum_lambda c_lambda M[lambda][mu] = [p_mu] h_n, i.e. M^T c = h.
    std::vector<std::vector<Rational>> transposed(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            transposed[j][i] = m.entries[i][j];
        }
    }
    const SymFun h = h_to_p(n);
    std::vector<Rational> rhs;
    rhs.reserve(size);
    for (const auto &mu : m.cols) {
        rhs.push_back(h.coeff(mu));
    }
    const std::vector<Rational> c = solve(std::move(transposed), std::move(rhs));

    std::map<Partition, Rational> result;
    SymFun check;
    for (std::size_t i = 0; i < size; ++i) {
        result.emplace(m.rows[i], c[i]);
        check += csf_of_union(family, m.rows[i]) * c[i];
    }
    if (check != h) {
        throw std::logic_error("h_in_csf_basis: round trip to the power-sum basis failed");
    }
    return result;
}

std::vector<WeightedGraph> graph_family(const std::string &name, unsigned max_vertices)
{
    std::vector<WeightedGraph> family;
    for (unsigned k = 1; k <= max_vertices; ++k) {
        if (name == "complete") {
            family.push_back(WeightedGraph::complete(k));
        } else if (name == "path") {
            family.push_back(WeightedGraph::path(k));
        } else {
            throw PreconditionError("unknown graph family '" + name + "' (expected complete or path)");
        }
    }
    return family;
}

} // namespace plethora
