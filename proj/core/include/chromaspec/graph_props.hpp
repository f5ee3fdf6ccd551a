#pragma once

#include <vector>

#include "chromaspec/graph.hpp"

namespace chromaspec {

/// Vertex sets of the connected components, each sorted, ordered by minimum vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);
int component_count(const Graph& g);
/// The empty graph counts as connected.
bool is_connected(const Graph& g);
/// Connected with no cut vertex; defined false for n < 3.
bool is_biconnected(const Graph& g);
bool is_bipartite(const Graph& g);
/// Planarity of the underlying simple graph (Boyer-Myrvold).
bool is_planar(const Graph& g);

}  // namespace chromaspec
