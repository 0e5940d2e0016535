#include "plethora/io.hpp"

#include <fstream>
#include <sstream>

#include "plethora/error.hpp"

namespace plethora::io {

namespace {

// Wraps nlohmann type errors so every malformed document is a precondition failure.
template <typename F>
auto guarded(const char *what, F &&f)
{
    try {
        return f();
    } catch (const json::exception &e) {
        throw PreconditionError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

Rational rational_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    return Rational::parse(j.get<std::string>());
}

} // namespace

json to_json(const TSeries &s)
{
    json coeffs = json::array();
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(c.to_string());
    }
    return {{"order", s.order()}, {"coeffs", coeffs}};
}

TSeries series_from_json(const json &j)
{
    return guarded("series", [&] {
        const unsigned order = j.at("order").get<unsigned>();
        std::vector<BiPoly> coeffs;
        for (const auto &c : j.at("coeffs")) {
            coeffs.push_back(BiPoly::parse(c.get<std::string>()));
        }
        return TSeries(order, std::move(coeffs));
    });
}

json to_json(const SymFun &f)
{
    json terms = json::array();
    for (const auto &[lambda, c] : f.terms()) {
        terms.push_back({{"partition", lambda.parts()}, {"coeff", c.to_string()}});
    }
    return {{"terms", terms}};
}

SymFun symfun_from_json(const json &j)
{
    return guarded("symmetric function", [&] {
        SymFun f;
        for (const auto &t : j.at("terms")) {
            f += SymFun(Partition(t.at("partition").get<std::vector<unsigned>>()), rational_from_json(t.at("coeff")));
        }
        return f;
    });
}

json to_json(const WeightedGraph &g)
{
    json edges = json::array();
    for (const auto &[i, j] : g.edges()) {
        edges.push_back({i, j});
    }
    return {{"n", g.n_vertices()}, {"edges", edges}, {"weights", g.weights()}};
}

WeightedGraph graph_from_json(const json &j)
{
    return guarded("graph", [&] {
        const unsigned n = j.at("n").get<unsigned>();
        std::vector<WeightedGraph::Edge> edges;
        for (const auto &e : j.at("edges")) {
            require(e.is_array() && e.size() == 2, "graph edges must be [i, j] pairs");
            edges.emplace_back(e[0].get<unsigned>(), e[1].get<unsigned>());
        }
        std::vector<unsigned> weights;
        if (j.contains("weights")) {
            weights = j.at("weights").get<std::vector<unsigned>>();
        }
        return WeightedGraph(n, std::move(edges), std::move(weights));
    });
}

json to_json(const HodgeDiamond &d)
{
    json h = json::array();
    for (const auto &[idx, mult] : d.numbers()) {
        h.push_back({idx.first, idx.second, mult});
    }
    return {{"dim", d.dim()}, {"h", h}};
}

HodgeDiamond diamond_from_json(const json &j)
{
    return guarded("diamond", [&] {
        const unsigned dim = j.at("dim").get<unsigned>();
        std::map<HodgeDiamond::Index, unsigned> h;
        for (const auto &entry : j.at("h")) {
            require(entry.is_array() && entry.size() == 3, "diamond entries must be [p, q, mult] triples");
            const unsigned p = entry[0].get<unsigned>();
            const unsigned q = entry[1].get<unsigned>();
            require(h.find({p, q}) == h.end(), "duplicate diamond entry");
            h[{p, q}] = entry[2].get<unsigned>();
        }
        return HodgeDiamond(dim, std::move(h));
    });
}

json to_json(const ABCPoly &f)
{
    json terms = json::array();
    for (const auto &[e, c] : f.terms()) {
        terms.push_back({{"A", e.alpha}, {"B", e.beta}, {"C", e.gamma}, {"coeff", c.to_string()}});
    }
    return {{"terms", terms}};
}

json to_json(const std::map<Partition, Rational> &coefficients)
{
    json terms = json::array();
    for (const auto &[lambda, c] : coefficients) {
        terms.push_back({{"partition", lambda.parts()}, {"coeff", c.to_string()}});
    }
    return {{"terms", terms}};
}

json parse_json(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw PreconditionError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    require(in.good(), "cannot read file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace plethora::io
