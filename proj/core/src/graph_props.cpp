#include "chromaspec/graph_props.hpp"

#include <algorithm>
#include <queue>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace chromaspec {

namespace {

std::vector<std::vector<int>> adjacency_lists(const Graph& g, int skip = -1) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
  for (const auto& kv : g.edge_multiset()) {
    const auto [a, b] = kv.first;
    if (a == skip || b == skip) continue;
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

int count_components(const std::vector<std::vector<int>>& adj, int skip) {
  std::vector<bool> seen(adj.size(), false);
  int count = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (seen[s] || static_cast<int>(s) == skip) continue;
    ++count;
    std::queue<int> frontier;
    frontier.push(static_cast<int>(s));
    seen[s] = true;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int u : adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          frontier.push(u);
        }
      }
    }
  }
  return count;
}

}  // namespace

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const auto adj = adjacency_lists(g);
  std::vector<int> label(adj.size(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> frontier;
    frontier.push(static_cast<int>(s));
    label[s] = id;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      out.back().push_back(v);
      for (int u : adj[static_cast<std::size_t>(v)]) {
        if (label[static_cast<std::size_t>(u)] < 0) {
          label[static_cast<std::size_t>(u)] = id;
          frontier.push(u);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

int component_count(const Graph& g) { return count_components(adjacency_lists(g), -1); }

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_biconnected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (count_components(adjacency_lists(g, v), v) != 1) return false;
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  if (g.has_loop()) return false;
  const auto adj = adjacency_lists(g);
  std::vector<int> side(adj.size(), -1);
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> frontier;
    frontier.push(static_cast<int>(s));
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int u : adj[static_cast<std::size_t>(v)]) {
        auto& su = side[static_cast<std::size_t>(u)];
        if (su < 0) {
          su = 1 - side[static_cast<std::size_t>(v)];
          frontier.push(u);
        } else if (su == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_planar(const Graph& g) {
  const int n = g.order();
  const auto edges = g.simple_edges();
  if (n <= 4) return true;
  if (static_cast<long>(edges.size()) > 3L * n - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(n));
  for (const auto& [a, b] : edges) boost::add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace chromaspec
