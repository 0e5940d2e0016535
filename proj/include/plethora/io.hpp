#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "plethora/abc.hpp"
#include "plethora/graph.hpp"
#include "plethora/hodge.hpp"
#include "plethora/partition.hpp"
#include "plethora/symfun.hpp"
#include "plethora/tseries.hpp"

namespace plethora::io {

using nlohmann::json;

/// {"order": N, "coeffs": ["<bipoly>", ...]} with exactly N+1 coefficients.
json to_json(const TSeries &s);
TSeries series_from_json(const json &j);

/// {"terms": [{"partition": [..], "coeff": "p/q"}, ...]}
json to_json(const SymFun &f);
SymFun symfun_from_json(const json &j);

/// {"n": int, "edges": [[i, j], ...], "weights": [...]} (weights optional).
json to_json(const WeightedGraph &g);
WeightedGraph graph_from_json(const json &j);

/// {"dim": n, "h": [[p, q, mult], ...]}
json to_json(const HodgeDiamond &d);
HodgeDiamond diamond_from_json(const json &j);

/// {"terms": [{"A": a, "B": b, "C": c, "coeff": "p/q"}, ...]}
json to_json(const ABCPoly &f);

json to_json(const std::map<Partition, Rational> &coefficients);

/// Parses text as JSON, turning syntax errors into PreconditionError.
json parse_json(const std::string &text);

/// Reads a whole file; a missing file is a PreconditionError.
std::string read_file(const std::string &path);

} // namespace plethora::io
