#pragma once

#include <string>
#include <utility>
#include <vector>

namespace plethora {

/// Finite simple graph on vertices 0..n-1 with positive integer vertex weights.
class WeightedGraph {
public:
    using Edge = std::pair<unsigned, unsigned>;

    /// Edges are normalized to (min, max) and sorted; loops, duplicates,
    /// out-of-range endpoints and non-positive weights are rejected.
    WeightedGraph(unsigned n_vertices, std::vector<Edge> edges, std::vector<unsigned> weights = {});

    static WeightedGraph complete(unsigned n);
    static WeightedGraph path(unsigned n);
    static WeightedGraph cycle(unsigned n);
    static WeightedGraph edgeless(unsigned n);

    /// Parses names like "K4", "P3", "C5", "E2" (edgeless).
    static WeightedGraph named(const std::string &name);

    unsigned n_vertices() const { return n_; }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<unsigned> &weights() const { return weights_; }
    unsigned total_weight() const;
    bool has_edge(unsigned i, unsigned j) const;
    bool is_connected() const;
    bool is_unweighted() const;

    WeightedGraph disjoint_union(const WeightedGraph &o) const;
    /// Removes edge index e.
    WeightedGraph delete_edge(std::size_t e) const;

    friend bool operator==(const WeightedGraph &, const WeightedGraph &) = default;

private:
    unsigned n_;
    std::vector<Edge> edges_;
    std::vector<unsigned> weights_;
};

} // namespace plethora
