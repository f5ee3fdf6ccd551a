#include "chromaspec/graph_ops.hpp"

#include <algorithm>
#include <vector>

#include "chromaspec/errors.hpp"

namespace chromaspec {

Graph delete_edge(const Graph& g, const EdgeRef& e) {
  Graph out = g;
  out.remove_edge(e.a, e.b);
  return out;
}

Graph contract_edge(const Graph& g, const EdgeRef& e) {
  if (e.a == e.b) throw DomainError("contract: cannot contract a loop");
  if (!g.has_edge(e)) {
    throw DomainError("contract: edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " not present");
  }
  const int keep = std::min(e.a, e.b);
  const int drop = std::max(e.a, e.b);
  const auto map = [&](int v) { return v == drop ? keep : (v > drop ? v - 1 : v); };

  Graph out(g.order() - 1);
  for (const auto& [pair, count] : g.edge_multiset()) {
    if (pair.first == keep && pair.second == drop) {
      if (count > 1) out.add_edge(keep, keep, count - 1);
      continue;
    }
    out.add_edge(map(pair.first), map(pair.second), count);
  }
  if (g.loop_count() > 0) out.add_edge(0, 0, static_cast<int>(g.loop_count()));
  return out;
}

Witness subdivide(const Witness& w) {
  w.validate();
  Witness out{w.graph, {}};
  out.graph.remove_edge(w.edge.a, w.edge.b);
  const int mid = out.graph.add_vertex();
  out.graph.add_edge(w.edge.a, mid);
  out.graph.add_edge(mid, w.edge.b);
  out.edge = {w.edge.a, mid};
  return out;
}

Witness add_apex(const Witness& w) {
  w.validate();
  Witness out = w;
  const int apex = out.graph.add_vertex();
  out.graph.add_edge(w.edge.a, apex);
  out.graph.add_edge(w.edge.b, apex);
  return out;
}

Graph add_leaf(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw DomainError("add_leaf: vertex out of range");
  Graph out = g;
  const int leaf = out.add_vertex();
  out.add_edge(v, leaf);
  return out;
}

Graph join_clique(const Graph& g, int m) {
  if (m < 1) throw DomainError("join_clique: clique size must be positive");
  Graph out = g;
  const int base = g.order();
  for (int i = 0; i < m; ++i) out.add_vertex();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) out.add_edge(base + i, base + j);
    for (int v = 0; v < base; ++v) out.add_edge(v, base + i);
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw DomainError("relabel: permutation size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) throw DomainError("relabel: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  Graph out(n);
  for (const auto& [pair, count] : g.edge_multiset()) {
    out.add_edge(perm[static_cast<std::size_t>(pair.first)], perm[static_cast<std::size_t>(pair.second)], count);
  }
  if (g.loop_count() > 0) out.add_edge(0, 0, static_cast<int>(g.loop_count()));
  return out;
}

}  // namespace chromaspec
