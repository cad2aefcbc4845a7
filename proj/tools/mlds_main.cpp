// Command-line front end: solve, gen, eval, peel, oracle.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlds/experiments.hpp"
#include "mlds/graph.hpp"
#include "mlds/io.hpp"
#include "mlds/metric.hpp"
#include "mlds/oracle.hpp"
#include "mlds/single_layer.hpp"
#include "mlds/stochastic.hpp"

using json = nlohmann::ordered_json;
using namespace mlds;

namespace {

// Exit codes: 0 ok, 2 bad flags (CLI11), 3 I/O, 4 solver, 5 other.
constexpr int kIoError = 3;
constexpr int kSolverError = 4;
constexpr int kOtherError = 5;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

MultilayerGraph load_graph(const std::string& path) {
    try {
        return load_multilayer_file(path);
    } catch (const std::exception& e) {
        throw IoError(path + ": " + e.what());
    }
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    out << text;
}

json labels_of(const MultilayerGraph& g, const VertexSubset& s) {
    json arr = json::array();
    for (Vertex v : s) arr.push_back(g.label(v));
    return arr;
}

json distribution_json(const MultilayerGraph& g, const SubsetDistribution& dist) {
    json arr = json::array();
    for (const Atom& a : dist.atoms) {
        arr.push_back({{"subset", labels_of(g, a.subset)}, {"probability", a.probability}});
    }
    return arr;
}

// The regret metric is maximized internally as a non-positive objective;
// users see the (positive) regret itself.
double reported(MetricKind kind, double value) {
    return kind == MetricKind::Regret ? -value : value;
}

VertexSubset parse_label_list(const MultilayerGraph& g, const std::string& csv) {
    std::vector<Vertex> members;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        bool found = false;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            if (g.label(v) == token) {
                members.push_back(v);
                found = true;
                break;
            }
        }
        if (!found) throw IoError("unknown vertex label: " + token);
    }
    return VertexSubset(std::move(members));
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int run_solve(const std::string& input, const std::string& metric, bool no_preprocess,
              double tol, int threads, const std::string& format, bool no_timings,
              const std::string& output) {
    auto g = load_graph(input);
    const MetricKind kind = parse_metric(metric);
    SolveOptions options;
    options.preprocess = !no_preprocess;
    options.tol = tol;
    options.threads = threads;
    auto r = solve_ab_density(g, kind, options);
    if (no_timings) r.preprocess_seconds = r.total_seconds = 0.0;

    if (format == "csv") {
        std::ostringstream out;
        out << "metric,optimal_value,lp_value,lower_bound,pruned_vertices,pruned_edges,"
               "preprocess_seconds,total_seconds,support_size\n";
        out << csv_escape(metric_name(kind)) << ',' << reported(kind, r.value) << ','
            << r.lp_value << ',' << r.lower_bound << ',' << r.pruned_vertices << ','
            << r.pruned_edges << ',' << r.preprocess_seconds << ',' << r.total_seconds << ','
            << r.distribution.atoms.size() << '\n';
        write_output(output, out.str());
        return 0;
    }

    json doc;
    doc["metric"] = metric_name(kind);
    doc["optimal_value"] = reported(kind, r.value);
    if (kind == MetricKind::Regret) {
        doc["sign_convention"] =
            "optimal_value is the worst-layer regret (non-negative); the maximized "
            "internal objective is its negation";
    }
    doc["lp_value"] = r.lp_value;
    doc["lower_bound"] = r.lower_bound;
    doc["pruned_vertices"] = r.pruned_vertices;
    doc["pruned_edges"] = r.pruned_edges;
    doc["preprocess_seconds"] = r.preprocess_seconds;
    doc["total_seconds"] = r.total_seconds;
    doc["distribution"] = distribution_json(g, r.distribution);
    json per_layer = json::array();
    for (const auto& pl : r.per_layer) {
        per_layer.push_back({{"layer", pl.layer},
                             {"expected_density", pl.expected_density},
                             {"expected_metric", pl.expected_metric}});
    }
    doc["per_layer"] = per_layer;
    write_output(output, doc.dump(2) + "\n");
    return 0;
}

int run_gen(int n, double exponent, int layers, int clique_size,
            const std::string& clique_layers, std::uint64_t seed, const std::string& output) {
    SynthSpec spec;
    spec.n = n;
    spec.exponent = exponent;
    spec.num_layers = layers;
    spec.clique_size = clique_size;
    if (clique_layers == "all") {
        spec.clique_layers = CliqueLayers::All;
    } else if (clique_layers == "one-random") {
        spec.clique_layers = CliqueLayers::OneRandom;
    } else {
        throw IoError("unknown --clique-layers value: " + clique_layers);
    }
    spec.seed = seed;
    auto synth = generate(spec);
    std::ostringstream out;
    out << "# synthetic multilayer graph: n=" << n << " exponent=" << exponent
        << " layers=" << layers << " clique_size=" << clique_size << " clique_layers="
        << clique_layers << " seed=" << seed << '\n';
    if (!synth.clique.empty()) {
        out << "# planted clique:";
        for (Vertex v : synth.clique) out << ' ' << synth.graph.label(v);
        out << "\n# planted layers:";
        for (int i : synth.planted_layers) out << ' ' << i;
        out << '\n';
    }
    save_multilayer(out, synth.graph);
    write_output(output, out.str());
    return 0;
}

int run_eval(const std::string& input, const std::string& dist_path, const std::string& metric,
             const std::string& planted_csv, const std::string& output) {
    auto g = load_graph(input);
    const MetricKind kind = parse_metric(metric);
    auto cfg = make_metric_config(g, kind);

    std::ifstream in(dist_path);
    if (!in) throw IoError("cannot open distribution file: " + dist_path);
    json doc = json::parse(in, nullptr, true, true);
    const json& atoms = doc.is_array() ? doc : doc.at("distribution");
    SubsetDistribution dist;
    for (const json& atom : atoms) {
        std::string labels;
        for (const json& l : atom.at("subset")) {
            if (!labels.empty()) labels += ',';
            labels += l.is_string() ? l.get<std::string>() : l.dump();
        }
        dist.atoms.push_back(
            {parse_label_list(g, labels), atom.at("probability").get<double>()});
    }

    std::optional<VertexSubset> planted;
    if (!planted_csv.empty()) planted = parse_label_list(g, planted_csv);
    auto report = evaluate(dist, g, cfg, planted);

    json out;
    out["metric"] = metric_name(kind);
    out["worst_layer"] = report.worst_layer;
    out["worst_value"] = reported(kind, report.worst_value);
    json per_layer = json::array();
    for (const auto& pl : report.per_layer) {
        per_layer.push_back({{"layer", pl.layer},
                             {"expected_density", pl.expected_density},
                             {"expected_metric", pl.expected_metric}});
    }
    out["per_layer"] = per_layer;
    if (report.f_score) {
        out["precision"] = report.f_score->precision;
        out["recall"] = report.f_score->recall;
        out["f_measure"] = report.f_score->f;
    }
    write_output(output, out.dump(2) + "\n");
    return 0;
}

int run_peel(const std::string& input, int layer, bool exact, const std::string& output) {
    auto g = load_graph(input);
    json out;
    out["layer"] = layer;
    if (exact) {
        auto opt = densest_exact(g, layer);
        out["method"] = "exact";
        out["subset"] = labels_of(g, opt.subset);
        out["density"] = opt.opt_density;
    } else {
        auto [subset, density] = greedy_peeling(g, layer);
        out["method"] = "greedy";
        out["subset"] = labels_of(g, subset);
        out["density"] = density;
    }
    write_output(output, out.dump(2) + "\n");
    return 0;
}

int run_oracle(const std::string& input, const std::string& metric, const std::string& output) {
    auto g = load_graph(input);
    const MetricKind kind = parse_metric(metric);
    auto cfg = make_metric_config(g, kind);
    auto r = oracle_ab_density(g, cfg);
    json out;
    out["metric"] = metric_name(kind);
    out["optimal_value"] = reported(kind, r.value);
    out["method"] = r.method;
    out["distribution"] = distribution_json(g, r.distribution);
    write_output(output, out.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochastic dense subgraph discovery in multilayer networks"};
    app.require_subcommand(1);

    std::string input, output, metric = "density", format = "json";
    bool no_preprocess = false, no_timings = false, exact = false;
    double tol = 1e-9;
    int threads = 1, layer = 0;

    auto* solve = app.add_subcommand("solve", "Optimal subset distribution for a metric");
    solve->add_option("--input", input, "graph TSV file")->required();
    solve->add_option("--output", output, "output file (default stdout)");
    solve->add_option("--metric", metric, "density, robust-ratio, or regret");
    solve->add_flag("--no-preprocess", no_preprocess, "skip safe vertex pruning");
    solve->add_option("--tol", tol, "LP tolerance (default 1e-9)");
    solve->add_option("--threads", threads, "threads for the per-layer solves");
    solve->add_option("--format", format, "json or csv");
    solve->add_flag("--no-timings", no_timings, "report zero wall times (reproducible output)");

    int n = 100, layers = 2, clique_size = 0;
    double exponent = 2.5;
    std::uint64_t seed = 0;
    std::string clique_layers = "all";
    auto* gen = app.add_subcommand("gen", "Synthetic power-law benchmark with a planted clique");
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--exponent", exponent, "degree power-law exponent (> 2)");
    gen->add_option("--layers", layers, "layer count");
    gen->add_option("--clique-size", clique_size, "planted clique size (0 = none)");
    gen->add_option("--clique-layers", clique_layers, "all or one-random");
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--output", output, "output file (default stdout)");

    std::string dist_path, planted_csv;
    auto* eval = app.add_subcommand("eval", "Evaluate a distribution file against a graph");
    eval->add_option("--input", input, "graph TSV file")->required();
    eval->add_option("--dist", dist_path, "distribution JSON (solve output or bare array)")
        ->required();
    eval->add_option("--metric", metric, "density, robust-ratio, or regret");
    eval->add_option("--planted", planted_csv, "comma-separated planted vertex labels");
    eval->add_option("--output", output, "output file (default stdout)");

    auto* peel = app.add_subcommand("peel", "Single-layer densest subgraph");
    peel->add_option("--input", input, "graph TSV file")->required();
    peel->add_option("--layer", layer, "layer index (default 0)");
    peel->add_flag("--exact", exact, "exact LP solve instead of greedy peeling");
    peel->add_option("--output", output, "output file (default stdout)");

    auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth (n <= 12)");
    oracle->add_option("--input", input, "graph TSV file")->required();
    oracle->add_option("--metric", metric, "density, robust-ratio, or regret");
    oracle->add_option("--output", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            return run_solve(input, metric, no_preprocess, tol, threads, format, no_timings,
                             output);
        }
        if (gen->parsed()) {
            return run_gen(n, exponent, layers, clique_size, clique_layers, seed, output);
        }
        if (eval->parsed()) return run_eval(input, dist_path, metric, planted_csv, output);
        if (peel->parsed()) return run_peel(input, layer, exact, output);
        if (oracle->parsed()) return run_oracle(input, metric, output);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kSolverError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kOtherError;
    }
    return kOtherError;
}
