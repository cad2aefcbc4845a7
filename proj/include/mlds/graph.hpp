#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mlds {

using Vertex = std::int32_t;

/// Sorted, duplicate-free set of vertex ids.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(std::vector<Vertex> members);

    static VertexSubset full(Vertex n);

    const std::vector<Vertex>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;

    std::size_t intersection_size(const VertexSubset& other) const;
    bool is_subset_of(const VertexSubset& other) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

private:
    std::vector<Vertex> members_;
};

struct Edge {
    Vertex u;
    Vertex v;
    double w;
};

/// One layer of a multilayer graph: an edge list plus a per-vertex
/// adjacency index kept consistent with it.
class EdgeLayer {
public:
    EdgeLayer() = default;
    EdgeLayer(Vertex n, std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const std::pair<Vertex, double>> neighbors(Vertex v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }
    double total_weight() const { return total_weight_; }
    double weighted_degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
    std::size_t num_edges() const { return edges_.size(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, double>>> adjacency_;
    std::vector<double> degree_;
    double total_weight_ = 0.0;
};

/// Immutable multilayer graph: n vertices shared by k weighted edge layers.
/// Vertex ids are contiguous 0..n-1; layers hold no self-loops, at most one
/// edge per pair, and strictly positive weights.
class MultilayerGraph {
public:
    /// Validates invariants and merges duplicate in-layer edges by summing
    /// weights. Labels default to the decimal ids.
    MultilayerGraph(Vertex n, std::vector<std::vector<Edge>> layer_edges,
                    std::vector<std::string> labels = {});

    Vertex num_vertices() const { return n_; }
    int num_layers() const { return static_cast<int>(layers_.size()); }
    const EdgeLayer& layer(int i) const { return layers_.at(static_cast<std::size_t>(i)); }
    const std::vector<EdgeLayer>& layers() const { return layers_; }
    const std::string& label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// w_i(S): total weight of layer-i edges inside S.
    double subset_weight(int layer, const VertexSubset& s) const;

    /// w_i(S)/|S|, defined as 0 for the empty subset.
    double density(int layer, const VertexSubset& s) const;

    /// Weighted degree of v in the subgraph induced by s, layer i. v must be in s.
    double weighted_degree(int layer, const VertexSubset& s, Vertex v) const;

    double total_layer_weight(int layer) const { return this->layer(layer).total_weight(); }

    /// Subgraph induced by s, relabeled to 0..|s|-1 with original labels kept.
    /// Every layer is retained even if it loses all its edges.
    MultilayerGraph induce(const VertexSubset& s) const;

    /// Union of all layers' edge sets as unordered pairs (u < v).
    std::vector<std::pair<Vertex, Vertex>> edge_union() const;

private:
    Vertex n_ = 0;
    std::vector<std::string> labels_;
    std::vector<EdgeLayer> layers_;
};

}  // namespace mlds
