#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mlds/experiments.hpp"
#include "mlds/graph.hpp"
#include "mlds/io.hpp"
#include "mlds/metric.hpp"
#include "mlds/oracle.hpp"
#include "mlds/prune.hpp"
#include "mlds/single_layer.hpp"
#include "mlds/stochastic.hpp"

namespace py = pybind11;
using namespace mlds;

namespace {

std::vector<std::pair<std::vector<Vertex>, double>> atoms_out(const SubsetDistribution& d) {
    std::vector<std::pair<std::vector<Vertex>, double>> out;
    out.reserve(d.atoms.size());
    for (const Atom& a : d.atoms) out.emplace_back(a.subset.members(), a.probability);
    return out;
}

SubsetDistribution atoms_in(const std::vector<std::pair<std::vector<Vertex>, double>>& atoms) {
    SubsetDistribution d;
    for (const auto& [members, p] : atoms) d.atoms.push_back({VertexSubset(members), p});
    return d;
}

}  // namespace

PYBIND11_MODULE(_mlds, m) {
    m.doc() = "Exact stochastic dense subgraph discovery in multilayer networks";

    py::class_<MultilayerGraph>(m, "MultilayerGraph")
        .def(py::init([](Vertex n, const std::vector<std::vector<std::tuple<Vertex, Vertex, double>>>& layers) {
                 std::vector<std::vector<Edge>> layer_edges(layers.size());
                 for (std::size_t i = 0; i < layers.size(); ++i) {
                     for (auto [u, v, w] : layers[i]) layer_edges[i].push_back({u, v, w});
                 }
                 return MultilayerGraph(n, std::move(layer_edges));
             }),
             py::arg("n"), py::arg("layers"))
        .def_property_readonly("num_vertices", &MultilayerGraph::num_vertices)
        .def_property_readonly("num_layers", &MultilayerGraph::num_layers)
        .def_property_readonly("labels", &MultilayerGraph::labels)
        .def("num_edges",
             [](const MultilayerGraph& g, int layer) { return g.layer(layer).num_edges(); },
             py::arg("layer"))
        .def("density",
             [](const MultilayerGraph& g, int layer, const std::vector<Vertex>& s) {
                 return g.density(layer, VertexSubset(s));
             },
             py::arg("layer"), py::arg("subset"));

    m.def("load_multilayer", &load_multilayer_file, py::arg("path"),
          "Load the TSV edge-list dialect: layer u v [weight] per line.");

    m.def(
        "solve",
        [](const MultilayerGraph& g, const std::string& metric, bool preprocess, double tol,
           int threads) {
            SolveOptions options;
            options.preprocess = preprocess;
            options.tol = tol;
            options.threads = threads;
            auto r = solve_ab_density(g, parse_metric(metric), options);
            py::dict out;
            out["metric"] = metric_name(r.metric);
            out["value"] = r.metric == MetricKind::Regret ? -r.value : r.value;
            out["lp_value"] = r.lp_value;
            out["lower_bound"] = r.lower_bound;
            out["pruned_vertices"] = r.pruned_vertices;
            out["pruned_edges"] = r.pruned_edges;
            out["is_basic"] = r.is_basic;
            out["distribution"] = atoms_out(r.distribution);
            return out;
        },
        py::arg("graph"), py::arg("metric") = "density", py::arg("preprocess") = true,
        py::arg("tol") = 1e-9, py::arg("threads") = 1,
        "Optimal subset distribution maximizing the worst-layer metric. "
        "Regret values are reported positive.");

    m.def(
        "oracle",
        [](const MultilayerGraph& g, const std::string& metric) {
            const auto kind = parse_metric(metric);
            auto r = oracle_ab_density(g, make_metric_config(g, kind));
            py::dict out;
            out["value"] = kind == MetricKind::Regret ? -r.value : r.value;
            out["distribution"] = atoms_out(r.distribution);
            return out;
        },
        py::arg("graph"), py::arg("metric") = "density",
        "Brute-force ground truth over all nonempty subsets (n <= 12).");

    m.def(
        "densest_exact",
        [](const MultilayerGraph& g, int layer) {
            auto opt = densest_exact(g, layer);
            return std::make_pair(opt.subset.members(), opt.opt_density);
        },
        py::arg("graph"), py::arg("layer") = 0);

    m.def(
        "greedy_peeling",
        [](const MultilayerGraph& g, int layer) {
            auto [subset, density] = greedy_peeling(g, layer);
            return std::make_pair(subset.members(), density);
        },
        py::arg("graph"), py::arg("layer") = 0);

    m.def(
        "generate",
        [](int n, double exponent, int layers, int clique_size, const std::string& clique_layers,
           std::uint64_t seed) {
            SynthSpec spec;
            spec.n = n;
            spec.exponent = exponent;
            spec.num_layers = layers;
            spec.clique_size = clique_size;
            spec.clique_layers =
                clique_layers == "one-random" ? CliqueLayers::OneRandom : CliqueLayers::All;
            spec.seed = seed;
            auto synth = generate(spec);
            return std::make_tuple(std::move(synth.graph), synth.clique.members(),
                                   synth.planted_layers);
        },
        py::arg("n"), py::arg("exponent") = 2.5, py::arg("layers") = 2,
        py::arg("clique_size") = 0, py::arg("clique_layers") = "all", py::arg("seed") = 0);

    m.def(
        "f_measure",
        [](const std::vector<std::pair<std::vector<Vertex>, double>>& atoms,
           const std::vector<Vertex>& planted) {
            auto s = f_measure(atoms_in(atoms), VertexSubset(planted));
            return std::make_tuple(s.precision, s.recall, s.f);
        },
        py::arg("distribution"), py::arg("planted"));

    m.def(
        "lower_bound",
        [](const MultilayerGraph& g, const std::string& metric) {
            auto cfg = make_metric_config(g, parse_metric(metric));
            return lower_bound_lp(g, cfg).value;
        },
        py::arg("graph"), py::arg("metric") = "density");
}
