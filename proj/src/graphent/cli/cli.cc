#include "graphent/cli/cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "graphent/alt_css/alt_css.h"
#include "graphent/graph/graph_io.h"
#include "graphent/graph/lc_orbit.h"
#include "graphent/graph/solvers.h"
#include "graphent/lattices/lattices.h"
#include "graphent/measures/evaluate.h"
#include "graphent/measures/report.h"
#include "graphent/oracle/dense.h"
#include "graphent/stabilizer/stabilizer_group.h"

namespace graphent {

namespace {

using nlohmann::json;

constexpr int kMaxOracleQubits = 10;
constexpr int kMaxSearchQubits = 8;
constexpr double kDenseTolerance = 1e-12;
constexpr double kEntropyTolerance = 1e-9;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string input;
    std::string edges;
    std::string graph6;
    std::string format = "edgelist";
    std::size_t orbit_cap = kDefaultOrbitCap;
    bool oracle = false;
    std::string method = "stabilizer";
    bool exact = false;
    uint64_t seed = 1;
    std::string out;
    bool members = false;
    std::string kind;
    std::string sizes;
    long long timeout_ms = 0;
};

// "1-2,2-3,3-1": one-based pairs; N is the largest vertex named.
Graph parse_inline_edges(const std::string &text) {
    std::vector<std::pair<long long, long long>> pairs;
    long long n = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t dash = item.find('-');
        if (dash == std::string::npos) {
            throw InputError("inline edge '" + item + "' is not of the form u-v");
        }
        long long u, v;
        try {
            std::size_t used_u, used_v;
            u = std::stoll(item.substr(0, dash), &used_u);
            v = std::stoll(item.substr(dash + 1), &used_v);
            if (used_u != dash || used_v != item.size() - dash - 1) {
                throw std::invalid_argument("trailing text");
            }
        } catch (const std::exception &) {
            throw InputError("inline edge '" + item + "' is not of the form u-v");
        }
        pairs.emplace_back(u, v);
        n = std::max({n, u, v});
    }
    std::ostringstream text_form;
    text_form << n << " " << pairs.size() << "\n";
    for (auto [u, v] : pairs) {
        text_form << u << " " << v << "\n";
    }
    return parse_graph(text_form.str(), GraphFormat::EdgeList);
}

Graph load_graph(const RunConfig &cfg, std::istream &in) {
    int sources = !cfg.input.empty() + !cfg.edges.empty() + !cfg.graph6.empty();
    if (sources != 1) {
        throw InputError("give exactly one of an input file, --edges or --graph6");
    }
    if (!cfg.edges.empty()) {
        return parse_inline_edges(cfg.edges);
    }
    if (!cfg.graph6.empty()) {
        return parse_graph(cfg.graph6, GraphFormat::Graph6);
    }
    GraphFormat format = parse_format_name(cfg.format);
    std::string text;
    if (cfg.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream file(cfg.input);
        if (!file) {
            throw InputError("cannot open '" + cfg.input + "'");
        }
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return parse_graph(text, format);
}

void emit(const RunConfig &cfg, std::ostream &out, const std::string &text) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out);
    if (!file) {
        throw InputError("cannot write '" + cfg.out + "'");
    }
    file << text;
}

void emit_json(const RunConfig &cfg, std::ostream &out, const json &j) { emit(cfg, out, j.dump(2) + "\n"); }

DensityMatrix dense_of(const SeparableStateDescription &css) { return mixture_density(css.components, css.weight); }

json oracle_json(const EntanglementReport &r, uint64_t seed) {
    int n = r.graph.num_vertices();
    if (n > kMaxOracleQubits) {
        return {{"skipped", "more than " + std::to_string(kMaxOracleQubits) + " qubits"}};
    }
    oracle::DenseState psi = oracle::statevector(r.graph);
    json j;
    j["ree_of_css"] = oracle::relative_entropy_pure(psi, dense_of(r.css)).bits;
    j["cps_overlap"] = oracle::overlap2(psi, r.cps);
    oracle::DenseState target = oracle::statevector(r.decomposed_graph);
    oracle::DenseState sum = oracle::DenseState::Zero(target.size());
    for (const auto &t : r.decomposition.terms) {
        sum += (t.sign * r.decomposition.normalization) * oracle::product_state_vector(t.state);
    }
    j["reconstruction_error"] = (sum - target).cwiseAbs().maxCoeff();
    if (n <= kMaxSearchQubits) {
        j["best_product_overlap_search"] = oracle::best_product_overlap(psi, n, 20, 200, seed);
    }
    return j;
}

int cmd_analyze(const RunConfig &cfg, std::istream &in, std::ostream &out) {
    Graph g = load_graph(cfg, in);
    EntanglementReport r = evaluate(g, cfg.orbit_cap);
    json j = report_json(r);
    if (cfg.oracle) {
        j["oracle"] = oracle_json(r, cfg.seed);
    }
    emit_json(cfg, out, j);
    return r.schmidt.is_point() ? kExitOk : kExitBoundsDiffer;
}

int cmd_css(const RunConfig &cfg, std::istream &in, std::ostream &out, std::ostream &err) {
    Graph g = load_graph(cfg, in);
    VertexSet alpha = max_independent_set(g);
    const std::string &m = cfg.method;
    if (m != "stabilizer" && m != "peps" && m != "noise" && m != "all") {
        throw InputError("unknown method '" + m + "' (stabilizer, peps, noise, all)");
    }
    json j;
    j["graph"] = graph_json(g);
    j["alpha"] = vertices_json(alpha.to_vector());
    SeparableStateDescription stabilizer = closest_separable_state(g, alpha);
    if (m == "stabilizer") {
        j["css"] = css_json(stabilizer);
        emit_json(cfg, out, j);
        return kExitOk;
    }
    std::optional<AltCss> peps, noise;
    if (m == "peps" || m == "all") {
        peps = peps_css(g, alpha);
    }
    if (m == "noise" || m == "all") {
        noise = noise_css(g, g.vertices() - alpha);
    }
    if (m != "all") {
        j["css"] = css_json((peps ? peps : noise)->description);
        emit_json(cfg, out, j);
        return kExitOk;
    }
    j["css"] = json::array({css_json(stabilizer), css_json(peps->description), css_json(noise->description)});
    int code = kExitOk;
    if (peps->dense && noise->dense) {
        DensityMatrix want = dense_of(stabilizer);
        StabilizerSumForm form = css_stabilizer_form(g, alpha);
        double d = std::max({(pauli_sum_density(form.elements, form.scale) - want).cwiseAbs().maxCoeff(),
                             (*peps->dense - want).cwiseAbs().maxCoeff(),
                             (*noise->dense - want).cwiseAbs().maxCoeff()});
        j["max_difference"] = d;
        j["verdict"] = d <= kDenseTolerance ? "equal" : "differ";
        if (d > kDenseTolerance) {
            err << "css constructions differ by " << d << "\n";
            code = kExitCssDisagree;
        }
    } else {
        j["verdict"] = "not compared";
    }
    emit_json(cfg, out, j);
    return code;
}

int cmd_orbit(const RunConfig &cfg, std::istream &in, std::ostream &out) {
    Graph g = load_graph(cfg, in);
    OrbitSummary s = lc_orbit(g, cfg.orbit_cap);
    json j;
    j["graph"] = graph_json(g);
    j["size"] = s.size;
    j["truncated"] = s.truncated;
    j["min_vertex_cover"] = s.min_vertex_cover;
    j["min_matching"] = s.min_matching;
    j["input_vertex_cover"] = s.input_vertex_cover;
    j["input_matching"] = s.input_matching;
    j["representative"] = graph_json(s.representative);
    j["lc_path"] = vertices_json(s.path);
    if (cfg.members) {
        json members = json::array();
        for (const Graph &h : enumerate_lc_orbit(g, cfg.orbit_cap).members) {
            members.push_back(graph_json(h));
        }
        j["members"] = members;
    }
    emit_json(cfg, out, j);
    return kExitOk;
}

std::vector<int> parse_sizes(const std::string &text) {
    std::vector<int> sizes;
    auto number = [&](const std::string &s) {
        try {
            std::size_t used;
            int v = std::stoi(s, &used);
            if (used != s.size()) {
                throw std::invalid_argument(s);
            }
            return v;
        } catch (const std::exception &) {
            throw InputError("bad lattice size '" + s + "'");
        }
    };
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t dots = item.find("..");
        if (dots == std::string::npos) {
            sizes.push_back(number(item));
            continue;
        }
        int lo = number(item.substr(0, dots)), hi = number(item.substr(dots + 2));
        if (hi < lo) {
            throw InputError("empty size range '" + item + "'");
        }
        for (int s = lo; s <= hi; s++) {
            sizes.push_back(s);
        }
    }
    if (sizes.empty()) {
        throw InputError("no lattice sizes given");
    }
    return sizes;
}

int cmd_lattice(const RunConfig &cfg, std::ostream &out) {
    LatticeKind kind;
    try {
        kind = parse_lattice_kind(cfg.kind);
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    SolverLimits limits{.max_nodes = 0, .deadline = std::chrono::milliseconds(cfg.timeout_ms)};
    std::ostringstream csv;
    csv << std::setprecision(12);
    csv << "kind,size,N,matching,vertex_cover,gap_exact,gap_formula,difference,note\n";
    for (int size : parse_sizes(cfg.sizes)) {
        LatticeRow row = lattice_row({kind, size}, cfg.exact, limits);
        if (!cfg.exact && !row.gap_formula) {
            throw InputError(std::string(lattice_kind_name(kind)) + " size " + std::to_string(size) + ": " + row.note);
        }
        auto cell = [&](const auto &v) {
            if (v) {
                csv << *v;
            }
            csv << ",";
        };
        csv << lattice_kind_name(kind) << "," << size << "," << row.n << ",";
        cell(row.matching);
        cell(row.vertex_cover);
        cell(row.gap_exact);
        cell(row.gap_formula);
        if (row.gap_exact && row.gap_formula) {
            csv << *row.gap_exact - *row.gap_formula;
        }
        csv << "," << (row.note.find(',') == std::string::npos ? row.note : "\"" + row.note + "\"") << "\n";
    }
    emit(cfg, out, csv.str());
    return kExitOk;
}

struct Check {
    std::string name;
    std::string status;  // pass, fail, skipped
    json detail;
};

int cmd_verify(const RunConfig &cfg, std::istream &in, std::ostream &out, std::ostream &err) {
    Graph g = load_graph(cfg, in);
    int n = g.num_vertices();
    if (n > kMaxOracleQubits) {
        throw InputError("verify needs at most " + std::to_string(kMaxOracleQubits) + " vertices");
    }
    EntanglementReport r = evaluate(g, cfg.orbit_cap);
    const Graph &dg = r.decomposed_graph;
    VertexSet alpha = r.decomposition.alpha;
    oracle::DenseState psi = oracle::statevector(g);
    std::vector<Check> checks;
    auto add = [&](std::string name, bool ok, json detail) {
        checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
    };

    {
        oracle::DenseState target = oracle::statevector(dg);
        oracle::DenseState sum = oracle::DenseState::Zero(target.size());
        for (const auto &t : r.decomposition.terms) {
            sum += (t.sign * r.decomposition.normalization) * oracle::product_state_vector(t.state);
        }
        double e = (sum - target).cwiseAbs().maxCoeff();
        add("reconstruction", e <= kDenseTolerance, {{"max_error", e}});
    }
    {
        StabilizerGroup s = generators_from_graph(dg);
        bool ok = true;
        for (const auto &t : r.decomposition.terms) {
            for (Vertex a : alpha) {
                PauliAction act = apply_generator(s.generators[a], t.state);
                ok = ok && act.phase == 0 && act.state == t.state;
            }
        }
        add("eigenvalues", ok, {{"terms", r.decomposition.terms.size()}, {"generators", alpha.size()}});
    }
    {
        StabilizerSumForm form = css_stabilizer_form(dg, alpha);
        double d = (pauli_sum_density(form.elements, form.scale) -
                    dense_of(closest_separable_state(dg, alpha)))
                       .cwiseAbs()
                       .maxCoeff();
        add("css_sum_form", d <= kDenseTolerance, {{"max_difference", d}});
    }
    {
        double bits = oracle::relative_entropy_pure(psi, dense_of(r.css)).bits;
        add("ree_value", std::abs(bits - r.bounds.upper) <= kEntropyTolerance,
            {{"relative_entropy", bits}, {"upper", r.bounds.upper}});
    }
    {
        double ov = oracle::overlap2(psi, r.cps);
        double want = std::pow(2.0, -r.bounds.upper);
        add("cps_overlap", std::abs(ov - want) <= kDenseTolerance, {{"overlap", ov}, {"expected", want}});
    }
    {
        VertexSet a = max_independent_set(g);
        DensityMatrix want = dense_of(closest_separable_state(g, a));
        double dp = (*peps_css(g, a).dense - want).cwiseAbs().maxCoeff();
        double dn = (*noise_css(g, g.vertices() - a).dense - want).cwiseAbs().maxCoeff();
        add("css_methods", std::max(dp, dn) <= kDenseTolerance, {{"peps", dp}, {"noise", dn}});
    }
    {
        double best = 0;
        for (uint64_t bits = 1; bits < (uint64_t{1} << (n - 1)); bits++) {
            best = std::max(best, oracle::reduced_entropy(psi, n, VertexSet(bits)));
        }
        add("schmidt_lower_bound", std::abs(best - r.bounds.lower) <= kEntropyTolerance,
            {{"max_bipartite_entropy", best}, {"lower", r.bounds.lower}});
    }
    if (r.certified && n <= kMaxSearchQubits) {
        double found = oracle::best_product_overlap(psi, n, 20, 200, cfg.seed);
        double cert = std::pow(2.0, -r.bounds.upper);
        add("product_overlap_search", found <= cert + kEntropyTolerance, {{"found", found}, {"certificate", cert}});
    } else {
        checks.push_back({"product_overlap_search", "skipped", {{"reason", "uncertified or too many qubits"}}});
    }

    bool all = true;
    json items = json::array();
    for (const Check &c : checks) {
        all = all && c.status != "fail";
        items.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
        if (c.status == "fail") {
            err << "verify: " << c.name << " failed: " << c.detail.dump() << "\n";
        }
    }
    json j;
    j["graph"] = graph_json(g);
    j["value"] = measure_json(r.schmidt);
    j["maximally_entangled"] = r.maximally_entangled;
    j["checks"] = items;
    j["all_pass"] = all;
    emit_json(cfg, out, j);
    return all ? kExitOk : kExitVerifyFailed;
}

void add_graph_options(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("input", cfg.input, "Graph file, or - for stdin");
    cmd->add_option("--edges", cfg.edges, "Inline one-based edge list, e.g. 1-2,2-3");
    cmd->add_option("--graph6", cfg.graph6, "Inline graph6 string");
    cmd->add_option("--format", cfg.format, "Input file format: edgelist or graph6");
    cmd->add_option("--orbit-cap", cfg.orbit_cap, "Largest local-complement orbit to enumerate");
    cmd->add_option("--out", cfg.out, "Write output here instead of stdout");
    cmd->add_option("--seed", cfg.seed, "Seed for randomized checks");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement measures of graph states"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App *analyze = app.add_subcommand("analyze", "Bounds, measures and certificates as JSON");
    add_graph_options(analyze, cfg);
    analyze->add_flag("--oracle", cfg.oracle, "Add dense cross-checks (n <= 10)");

    CLI::App *css = app.add_subcommand("css", "Closest separable state by one or all constructions");
    add_graph_options(css, cfg);
    css->add_option("--method", cfg.method, "stabilizer, peps, noise or all");

    CLI::App *orbit = app.add_subcommand("orbit", "Local-complement orbit summary");
    add_graph_options(orbit, cfg);
    orbit->add_flag("--members", cfg.members, "List every orbit member");

    CLI::App *lattice = app.add_subcommand("lattice", "Gap table for a lattice family as CSV");
    lattice->add_option("kind", cfg.kind, "triangular, kagome, hexa-triangular or hexagonal")->required();
    lattice->add_option("sizes", cfg.sizes, "Sizes: 4, 1..4 or 1,3,5")->required();
    lattice->add_flag("--exact", cfg.exact, "Also solve each patch exactly");
    lattice->add_option("--timeout-ms", cfg.timeout_ms, "Time limit per exact solve");
    lattice->add_option("--out", cfg.out, "Write output here instead of stdout");

    CLI::App *verify = app.add_subcommand("verify", "Dense cross-checks on one graph (n <= 10)");
    add_graph_options(verify, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (analyze->parsed()) {
            return cmd_analyze(cfg, in, out);
        }
        if (css->parsed()) {
            return cmd_css(cfg, in, out, err);
        }
        if (orbit->parsed()) {
            return cmd_orbit(cfg, in, out);
        }
        if (lattice->parsed()) {
            return cmd_lattice(cfg, out);
        }
        return cmd_verify(cfg, in, out, err);
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
    } catch (const GraphParseError &e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitInputError;
}

}  // namespace graphent
