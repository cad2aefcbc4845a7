#include "mlds/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mlds {

VertexSubset::VertexSubset(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.front() < 0) {
        throw std::invalid_argument("VertexSubset: negative vertex id");
    }
}

VertexSubset VertexSubset::full(Vertex n) {
    std::vector<Vertex> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), Vertex{0});
    return VertexSubset(std::move(ids));
}

bool VertexSubset::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::size_t VertexSubset::intersection_size(const VertexSubset& other) const {
    std::size_t count = 0;
    auto it = other.members_.begin();
    for (Vertex v : members_) {
        it = std::lower_bound(it, other.members_.end(), v);
        if (it == other.members_.end()) break;
        if (*it == v) ++count;
    }
    return count;
}

bool VertexSubset::is_subset_of(const VertexSubset& other) const {
    return intersection_size(other) == size();
}

EdgeLayer::EdgeLayer(Vertex n, std::vector<Edge> edges)
    : edges_(std::move(edges)),
      adjacency_(static_cast<std::size_t>(n)),
      degree_(static_cast<std::size_t>(n), 0.0) {
    for (const Edge& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.w);
        adjacency_[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.w);
        degree_[static_cast<std::size_t>(e.u)] += e.w;
        degree_[static_cast<std::size_t>(e.v)] += e.w;
        total_weight_ += e.w;
    }
}

MultilayerGraph::MultilayerGraph(Vertex n, std::vector<std::vector<Edge>> layer_edges,
                                 std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("MultilayerGraph: negative vertex count");
    if (layer_edges.empty()) throw std::invalid_argument("MultilayerGraph: needs at least one layer");
    if (labels_.empty()) {
        labels_.reserve(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
    }
    if (labels_.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("MultilayerGraph: label count does not match vertex count");
    }
    layers_.reserve(layer_edges.size());
    for (auto& edges : layer_edges) {
        std::map<std::pair<Vertex, Vertex>, double> merged;
        for (const Edge& e : edges) {
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
                throw std::invalid_argument("MultilayerGraph: vertex id out of range");
            }
            if (e.u == e.v) throw std::invalid_argument("MultilayerGraph: self-loop");
            if (!(e.w > 0.0)) throw std::invalid_argument("MultilayerGraph: non-positive edge weight");
            merged[std::minmax(e.u, e.v)] += e.w;
        }
        std::vector<Edge> simple;
        simple.reserve(merged.size());
        for (const auto& [pair, w] : merged) simple.push_back({pair.first, pair.second, w});
        layers_.emplace_back(n, std::move(simple));
    }
}

double MultilayerGraph::subset_weight(int layer_idx, const VertexSubset& s) const {
    const EdgeLayer& l = layer(layer_idx);
    double total = 0.0;
    // Iterate adjacency of the subset's vertices; count each edge at its lower endpoint.
    for (Vertex v : s) {
        for (const auto& [nbr, w] : l.neighbors(v)) {
            if (nbr > v && s.contains(nbr)) total += w;
        }
    }
    return total;
}

double MultilayerGraph::density(int layer_idx, const VertexSubset& s) const {
    if (s.empty()) return 0.0;
    return subset_weight(layer_idx, s) / static_cast<double>(s.size());
}

double MultilayerGraph::weighted_degree(int layer_idx, const VertexSubset& s, Vertex v) const {
    if (!s.contains(v)) throw std::invalid_argument("weighted_degree: vertex not in subset");
    double total = 0.0;
    for (const auto& [nbr, w] : layer(layer_idx).neighbors(v)) {
        if (s.contains(nbr)) total += w;
    }
    return total;
}

MultilayerGraph MultilayerGraph::induce(const VertexSubset& s) const {
    if (s.empty()) throw std::invalid_argument("induce: empty subset");
    std::vector<Vertex> new_id(static_cast<std::size_t>(n_), -1);
    std::vector<std::string> labels;
    labels.reserve(s.size());
    Vertex next = 0;
    for (Vertex v : s) {
        if (v >= n_) throw std::invalid_argument("induce: vertex id out of range");
        new_id[static_cast<std::size_t>(v)] = next++;
        labels.push_back(labels_[static_cast<std::size_t>(v)]);
    }
    std::vector<std::vector<Edge>> layer_edges(layers_.size());
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        for (const Edge& e : layers_[i].edges()) {
            Vertex nu = new_id[static_cast<std::size_t>(e.u)];
            Vertex nv = new_id[static_cast<std::size_t>(e.v)];
            if (nu >= 0 && nv >= 0) layer_edges[i].push_back({nu, nv, e.w});
        }
    }
    return MultilayerGraph(static_cast<Vertex>(s.size()), std::move(layer_edges), std::move(labels));
}

std::vector<std::pair<Vertex, Vertex>> MultilayerGraph::edge_union() const {
    std::vector<std::pair<Vertex, Vertex>> all;
    for (const EdgeLayer& l : layers_) {
        for (const Edge& e : l.edges()) all.push_back(std::minmax(e.u, e.v));
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

}  // namespace mlds
