#include "plethora/cli.hpp"

#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "plethora/abc.hpp"
#include "plethora/chromatic.hpp"
#include "plethora/error.hpp"
#include "plethora/genfun.hpp"
#include "plethora/hodge.hpp"
#include "plethora/io.hpp"
#include "plethora/verify.hpp"

namespace plethora::cli {

namespace {

using io::json;

struct Options {
    std::string format = "text";
    std::string inline_json;
    std::string diamond;
    std::string poly;
    std::string series;
    std::string graph;
    std::string method = "product";
    std::string mode = "ordered";
    std::string cycle_type;
    std::string direction;
    std::string family;
    std::string suite = "all";
    unsigned order = 4;
    unsigned t_power = 1;
    unsigned n = 0;
    bool signed_form = false;
    bool birational = false;
};

// A NAME|PATH argument: an existing file wins, otherwise the built-in name is tried.
json load_json(const std::string &path) { return io::parse_json(io::read_file(path)); }

bool is_file(const std::string &s) { return std::filesystem::is_regular_file(s); }

HodgeDiamond diamond_input(const Options &o)
{
    if (!o.inline_json.empty()) {
        return io::diamond_from_json(io::parse_json(o.inline_json));
    }
    require(!o.diamond.empty(), "a diamond is required (--diamond NAME|PATH or --inline JSON)");
    return is_file(o.diamond) ? io::diamond_from_json(load_json(o.diamond)) : HodgeDiamond::named(o.diamond);
}

WeightedGraph graph_input(const Options &o)
{
    if (!o.inline_json.empty()) {
        return io::graph_from_json(io::parse_json(o.inline_json));
    }
    require(!o.graph.empty(), "a graph is required (--graph NAME|PATH or --inline JSON)");
    return is_file(o.graph) ? io::graph_from_json(load_json(o.graph)) : WeightedGraph::named(o.graph);
}

TSeries series_input(const Options &o)
{
    if (!o.inline_json.empty()) {
        return io::series_from_json(io::parse_json(o.inline_json));
    }
    require(!o.series.empty(), "a series is required (--series PATH or --inline JSON)");
    return io::series_from_json(load_json(o.series));
}

// Polynomial operand: --poly wins, otherwise the HD polynomial of the diamond.
BiPoly poly_or_diamond(const Options &o)
{
    if (!o.poly.empty()) {
        return BiPoly::parse(o.poly);
    }
    return e_polynomial(diamond_input(o), o.signed_form);
}

TSeries pe_product_of_poly(const BiPoly &f, unsigned order)
{
    std::vector<PowerFactor> factors;
    for (const auto &[m, c] : f.terms()) {
        require(c.is_integer(), "pe --method product needs integer coefficients, got " + c.to_string());
        factors.push_back({BiPoly::monomial(m.a, m.b), 1, -c.numerator().get_si()});
    }
    return expand_product_of_powers(factors, order);
}

TSeries run_pe(const Options &o)
{
    const bool from_poly = !o.poly.empty();
    std::optional<HodgeDiamond> d;
    if (!from_poly) {
        d = diamond_input(o);
    }
    const BiPoly f = from_poly ? BiPoly::parse(o.poly) : e_polynomial(*d, false);
    if (o.method == "product") {
        return from_poly ? pe_product_of_poly(f, o.order) : pe_product_formula(*d, o.order);
    }
    if (o.method == "hn") {
        return pe_via_hn(f, o.order);
    }
    return pe_via_coloring(f, o.order);
}

CycleType parse_cycle_type(const std::string &text)
{
    std::vector<unsigned> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(item, &used);
            require(used == item.size(), "");
            parts.push_back(static_cast<unsigned>(v));
        } catch (const std::exception &) {
            throw PreconditionError("malformed cycle type '" + text + "' (expected e.g. 2,1)");
        }
    }
    require(!parts.empty(), "empty cycle type");
    return CycleType(Partition(parts));
}

std::vector<WeightedGraph> family_input(const Options &o, unsigned n)
{
    if (!o.inline_json.empty() || is_file(o.family)) {
        const json j = o.inline_json.empty() ? load_json(o.family) : io::parse_json(o.inline_json);
        require(j.is_array(), "a graph family must be a JSON array of graphs");
        std::vector<WeightedGraph> family;
        for (const auto &g : j) {
            family.push_back(io::graph_from_json(g));
        }
        return family;
    }
    return graph_family(o.family, n);
}

void emit(std::ostream &out, const Options &o, const json &as_json, const std::string &as_text)
{
    if (o.format == "json") {
        out << as_json.dump() << '\n';
    } else {
        out << as_text;
        if (as_text.empty() || as_text.back() != '\n') {
            out << '\n';
        }
    }
}

void emit_series(std::ostream &out, const Options &o, const TSeries &s) { emit(out, o, io::to_json(s), s.to_string()); }

void emit_poly(std::ostream &out, const Options &o, const BiPoly &p)
{
    emit(out, o, json{{"poly", p.to_string()}}, p.to_string());
}

int report(std::ostream &out, const Options &o, const std::vector<verify::SuiteResult> &results)
{
    bool all = true;
    json j = json::array();
    std::string text;
    for (const auto &r : results) {
        all = all && r.passed;
        j.push_back({{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"counterexample", r.counterexample}});
        text += r.name + ": " + (r.passed ? "pass" : "FAIL") + " (" + std::to_string(r.checks) + " checks)";
        if (!r.passed) {
            text += " first counterexample: " + r.counterexample;
        }
        text += '\n';
    }
    emit(out, o, json{{"passed", all}, {"suites", j}}, text);
    return all ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Exact plethystic exponentials, chromatic symmetric functions and Hodge-Deligne series", "plethora"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto add_order = [&](CLI::App *sub) { sub->add_option("--order", o.order, "Truncation order in t")->capture_default_str(); };
    auto add_diamond = [&](CLI::App *sub) {
        sub->add_option("--diamond", o.diamond, "Built-in diamond (P1, P2, elliptic, empty) or JSON file");
        sub->add_option("--inline", o.inline_json, "Input as inline JSON");
    };

    auto *pe_cmd = app.add_subcommand("pe", "Plethystic exponential of HD(X) t");
    add_diamond(pe_cmd);
    pe_cmd->add_option("--poly", o.poly, "Polynomial in u, v instead of a diamond");
    pe_cmd->add_option("--method", o.method, "product, hn or coloring")
        ->check(CLI::IsMember({"product", "hn", "coloring"}))
        ->capture_default_str();
    add_order(pe_cmd);

    auto *pl_cmd = app.add_subcommand("pl", "Plethystic logarithm of a series");
    pl_cmd->add_option("--series", o.series, "Series JSON file");
    pl_cmd->add_option("--inline", o.inline_json, "Series as inline JSON");
    auto *pl_order = pl_cmd->add_option("--order", o.order, "Truncation order (defaults to the series order)");

    auto *csf_cmd = app.add_subcommand("csf", "Chromatic symmetric function in the power-sum basis");
    csf_cmd->add_option("--graph", o.graph, "Graph name (K4, P3, C5, E2) or JSON file");
    csf_cmd->add_option("--inline", o.inline_json, "Graph as inline JSON");

    auto *color_cmd = app.add_subcommand("color-sum", "Signed coloring sum over acyclic orientations");
    color_cmd->add_option("--graph", o.graph, "Graph name or JSON file");
    color_cmd->add_option("--inline", o.inline_json, "Graph as inline JSON");
    color_cmd->add_option("--poly", o.poly, "Integer polynomial in u, v")->required();
    color_cmd->add_option("--t-power", o.t_power, "Power of t attached to the polynomial")->capture_default_str();
    add_order(color_cmd);

    auto *conf_cmd = app.add_subcommand("conf", "Configuration-space E-polynomials and series");
    conf_cmd->add_option("--mode", o.mode, "ordered, sign, unordered or equivariant")
        ->check(CLI::IsMember({"ordered", "sign", "unordered", "equivariant"}))
        ->capture_default_str();
    add_diamond(conf_cmd);
    conf_cmd->add_option("--poly", o.poly, "E-polynomial instead of a diamond (ordered, equivariant)");
    conf_cmd->add_option("--n", o.n, "Number of points (ordered)");
    conf_cmd->add_option("--cycle-type", o.cycle_type, "Cycle lengths, e.g. 2,1 (equivariant)");
    conf_cmd->add_flag("--signed", o.signed_form, "Use the signed E-polynomial of the diamond");
    add_order(conf_cmd);

    auto *charvar_cmd = app.add_subcommand("charvar", "Full and irreducible character-variety series");
    charvar_cmd->add_option("--direction", o.direction, "full-from-irr or irr-from-full")
        ->check(CLI::IsMember({"full-from-irr", "irr-from-full"}))
        ->required();
    charvar_cmd->add_option("--series", o.series, "Series JSON file");
    charvar_cmd->add_option("--inline", o.inline_json, "Series as inline JSON");
    auto *charvar_order = charvar_cmd->add_option("--order", o.order, "Truncation order (defaults to the series order)");

    auto *abc_cmd = app.add_subcommand("abc", "Decompose a diamond in the A, B, C coordinates");
    add_diamond(abc_cmd);
    abc_cmd->add_flag("--birational", o.birational, "Set C = 0");

    auto *basis_cmd = app.add_subcommand("basis", "Coefficients of h_n in a chromatic basis");
    basis_cmd->add_option("--family", o.family, "complete, path or a JSON array of graphs")->required();
    basis_cmd->add_option("--inline", o.inline_json, "Family as an inline JSON array");
    basis_cmd->add_option("--n", o.n, "Degree")->required();

    auto *verify_cmd = app.add_subcommand("verify", "Run a named verification suite");
    std::vector<std::string> suites = verify::suite_names();
    suites.push_back("all");
    verify_cmd->add_option("suite", o.suite, "Suite name or all")->check(CLI::IsMember(suites))->capture_default_str();
    add_order(verify_cmd);

    std::vector<std::string> argv_storage{"plethora"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (pe_cmd->parsed()) {
            emit_series(out, o, run_pe(o));
        } else if (pl_cmd->parsed()) {
            const TSeries g = series_input(o);
            const unsigned order = pl_order->count() ? o.order : g.order();
            require(g.order() >= order, "input series is truncated below the requested order");
            emit_series(out, o, pl(g.truncate(order)));
        } else if (csf_cmd->parsed()) {
            const SymFun x = csf(graph_input(o));
            emit(out, o, io::to_json(x), x.to_string());
        } else if (color_cmd->parsed()) {
            emit_series(out, o, cs_coloring_sum(graph_input(o), BiPoly::parse(o.poly), o.t_power, o.order));
        } else if (conf_cmd->parsed()) {
            if (o.mode == "ordered") {
                emit_poly(out, o, conf_ordered_epoly(poly_or_diamond(o), o.n));
            } else if (o.mode == "equivariant") {
                require(!o.cycle_type.empty(), "--mode equivariant needs --cycle-type");
                emit_poly(out, o, equiv_config_epoly(poly_or_diamond(o), parse_cycle_type(o.cycle_type)));
            } else if (o.mode == "sign") {
                emit_series(out, o, ordered_sign_series(diamond_input(o), o.order));
            } else {
                emit_series(out, o, unordered_config_series(diamond_input(o), o.order));
            }
        } else if (charvar_cmd->parsed()) {
            const TSeries s = series_input(o);
            const unsigned order = charvar_order->count() ? o.order : s.order();
            const GeometricSeries r = o.direction == "full-from-irr"
                                          ? charvar_full_from_irr({s, SeriesRole::irreducible}, order)
                                          : charvar_irr_from_full({s, SeriesRole::full}, order);
            emit_series(out, o, r.series);
        } else if (abc_cmd->parsed()) {
            ABCPoly f = abc_decompose(diamond_input(o));
            if (o.birational) {
                f = birational_reduce(f);
            }
            emit(out, o, io::to_json(f), f.to_string());
        } else if (basis_cmd->parsed()) {
            const auto coeffs = h_in_csf_basis(o.n, family_input(o, o.n));
            std::string text;
            for (const auto &[lambda, c] : coeffs) {
                text += lambda.to_string() + " " + c.to_string() + "\n";
            }
            emit(out, o, io::to_json(coeffs), text);
        } else if (verify_cmd->parsed()) {
            if (o.suite == "all") {
                return report(out, o, verify::run_all(o.order));
            }
            return report(out, o, {verify::run_suite(o.suite, o.order)});
        }
    } catch (const std::exception &e) {
        // PreconditionError, GuardError and malformed input all land here.
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace plethora::cli
