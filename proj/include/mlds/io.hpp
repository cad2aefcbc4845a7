#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mlds/graph.hpp"

namespace mlds {

/// Parse the TSV edge-list dialect: one edge per line,
/// `layer<TAB>u<TAB>v[<TAB>weight]` (any whitespace accepted as separator),
/// weight defaulting to 1.0, `#` lines skipped. Layer and vertex tokens are
/// arbitrary strings mapped to dense ids in first-appearance order.
/// Duplicate edges within a layer are merged by summing weights.
MultilayerGraph load_multilayer(std::istream& in);

MultilayerGraph load_multilayer_file(const std::string& path);

/// Per-layer file mode: each file holds one layer of `u<TAB>v[<TAB>weight]` lines.
MultilayerGraph load_layer_files(const std::vector<std::string>& paths);

/// Write a graph back in the TSV dialect (layer ids as indices, vertices as labels).
void save_multilayer(std::ostream& out, const MultilayerGraph& g);

}  // namespace mlds
