#include "plethora/graph.hpp"

#include <algorithm>
#include <numeric>

#include "plethora/error.hpp"

namespace plethora {

WeightedGraph::WeightedGraph(unsigned n_vertices, std::vector<Edge> edges, std::vector<unsigned> weights)
    : n_(n_vertices), edges_(std::move(edges)), weights_(std::move(weights))
{
    require(n_ >= 1, "graph needs at least one vertex");
    if (weights_.empty()) {
        weights_.assign(n_, 1);
    }
    require(weights_.size() == n_, "graph needs exactly one weight per vertex");
    for (unsigned w : weights_) {
        require(w >= 1, "vertex weights must be positive");
    }
    for (auto &[i, j] : edges_) {
        require(i < n_ && j < n_, "edge endpoint out of range");
        require(i != j, "graph may not contain loops");
        if (i > j) {
            std::swap(i, j);
        }
    }
    std::sort(edges_.begin(), edges_.end());
    require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(), "graph may not contain duplicate edges");
}

WeightedGraph WeightedGraph::complete(unsigned n)
{
    std::vector<Edge> e;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            e.emplace_back(i, j);
        }
    }
    return WeightedGraph(n, std::move(e));
}

WeightedGraph WeightedGraph::path(unsigned n)
{
    std::vector<Edge> e;
    for (unsigned i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return WeightedGraph(n, std::move(e));
}

WeightedGraph WeightedGraph::cycle(unsigned n)
{
    require(n >= 3, "cycle needs at least three vertices");
    std::vector<Edge> e;
    for (unsigned i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
    }
    return WeightedGraph(n, std::move(e));
}

WeightedGraph WeightedGraph::edgeless(unsigned n)
{
    return WeightedGraph(n, {});
}

WeightedGraph WeightedGraph::named(const std::string &name)
{
    require(name.size() >= 2, "unknown graph name '" + name + "'");
    unsigned n = 0;
    try {
        n = static_cast<unsigned>(std::stoul(name.substr(1)));
    } catch (const std::exception &) {
        throw PreconditionError("unknown graph name '" + name + "'");
    }
    switch (name[0]) {
    case 'K':
        return complete(n);
    case 'P':
        return path(n);
    case 'C':
        return cycle(n);
    case 'E':
        return edgeless(n);
    default:
        throw PreconditionError("unknown graph name '" + name + "'");
    }
}

unsigned WeightedGraph::total_weight() const
{
    return std::accumulate(weights_.begin(), weights_.end(), 0U);
}

bool WeightedGraph::has_edge(unsigned i, unsigned j) const
{
    if (i > j) {
        std::swap(i, j);
    }
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

bool WeightedGraph::is_connected() const
{
    std::vector<unsigned> parent(n_);
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](unsigned x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    unsigned components = n_;
    for (const auto &[i, j] : edges_) {
        const unsigned a = find(i);
        const unsigned b = find(j);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

bool WeightedGraph::is_unweighted() const
{
    return std::all_of(weights_.begin(), weights_.end(), [](unsigned w) { return w == 1; });
}

WeightedGraph WeightedGraph::disjoint_union(const WeightedGraph &o) const
{
    std::vector<Edge> e = edges_;
    for (const auto &[i, j] : o.edges_) {
        e.emplace_back(i + n_, j + n_);
    }
    std::vector<unsigned> w = weights_;
    w.insert(w.end(), o.weights_.begin(), o.weights_.end());
    return WeightedGraph(n_ + o.n_, std::move(e), std::move(w));
}

WeightedGraph WeightedGraph::delete_edge(std::size_t e) const
{
    std::vector<Edge> rest = edges_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(e));
    return WeightedGraph(n_, std::move(rest), weights_);
}

} // namespace plethora
