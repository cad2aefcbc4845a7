#include "mlds/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

namespace mlds {

namespace {

struct ParseState {
    std::unordered_map<std::string, int> layer_ids;
    std::unordered_map<std::string, Vertex> vertex_ids;
    std::vector<std::string> labels;
    std::vector<std::vector<Edge>> layer_edges;

    Vertex vertex(const std::string& token) {
        auto [it, inserted] = vertex_ids.try_emplace(token, static_cast<Vertex>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    }

    int layer(const std::string& token) {
        auto [it, inserted] = layer_ids.try_emplace(token, static_cast<int>(layer_edges.size()));
        if (inserted) layer_edges.emplace_back();
        return it->second;
    }
};

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + msg);
}

double parse_weight(const std::string& token, std::size_t line_no) {
    std::size_t pos = 0;
    double w = 0.0;
    try {
        w = std::stod(token, &pos);
    } catch (const std::exception&) {
        fail(line_no, "bad weight '" + token + "'");
    }
    if (pos != token.size()) fail(line_no, "bad weight '" + token + "'");
    if (!(w > 0.0)) fail(line_no, "non-positive weight '" + token + "'");
    return w;
}

void parse_line(ParseState& state, const std::string& line, std::size_t line_no,
                bool with_layer_column, int fixed_layer) {
    std::istringstream fields(line);
    std::string layer_tok, u_tok, v_tok, w_tok, extra;
    int layer = fixed_layer;
    if (with_layer_column) {
        if (!(fields >> layer_tok >> u_tok >> v_tok)) fail(line_no, "expected `layer u v [weight]`");
        layer = state.layer(layer_tok);
    } else {
        if (!(fields >> u_tok >> v_tok)) fail(line_no, "expected `u v [weight]`");
    }
    double w = 1.0;
    if (fields >> w_tok) w = parse_weight(w_tok, line_no);
    if (fields >> extra) fail(line_no, "trailing token '" + extra + "'");
    Vertex u = state.vertex(u_tok);
    Vertex v = state.vertex(v_tok);
    if (u == v) fail(line_no, "self-loop on '" + u_tok + "'");
    state.layer_edges[static_cast<std::size_t>(layer)].push_back({u, v, w});
}

bool is_blank_or_comment(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r\n");
    return pos == std::string::npos || line[pos] == '#';
}

MultilayerGraph finish(ParseState&& state) {
    if (state.labels.empty()) throw std::runtime_error("empty input: no edges found");
    const auto n = static_cast<Vertex>(state.labels.size());
    return MultilayerGraph(n, std::move(state.layer_edges), std::move(state.labels));
}

}  // namespace

MultilayerGraph load_multilayer(std::istream& in) {
    ParseState state;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        parse_line(state, line, line_no, /*with_layer_column=*/true, 0);
    }
    return finish(std::move(state));
}

MultilayerGraph load_multilayer_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return load_multilayer(in);
}

MultilayerGraph load_layer_files(const std::vector<std::string>& paths) {
    if (paths.empty()) throw std::runtime_error("no layer files given");
    ParseState state;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        state.layer_edges.resize(i + 1);
        std::ifstream in(paths[i]);
        if (!in) throw std::runtime_error("cannot open '" + paths[i] + "'");
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (is_blank_or_comment(line)) continue;
            parse_line(state, line, line_no, /*with_layer_column=*/false, static_cast<int>(i));
        }
    }
    return finish(std::move(state));
}

void save_multilayer(std::ostream& out, const MultilayerGraph& g) {
    out.precision(17);
    for (int i = 0; i < g.num_layers(); ++i) {
        for (const Edge& e : g.layer(i).edges()) {
            out << i << '\t' << g.label(e.u) << '\t' << g.label(e.v) << '\t' << e.w << '\n';
        }
    }
}

}  // namespace mlds
