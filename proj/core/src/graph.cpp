#include "chromaspec/graph.hpp"

#include <algorithm>
#include <sstream>

#include "chromaspec/errors.hpp"

namespace chromaspec {

namespace {
Graph::Pair ordered(int a, int b) { return a < b ? Graph::Pair{a, b} : Graph::Pair{b, a}; }
}  // namespace

Graph::Graph(int order) : n_(order) {
  if (order < 0) throw DomainError("graph: negative order");
}

Graph::Graph(int order, std::initializer_list<Pair> edges) : Graph(order) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw DomainError("graph: a simple cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::complete_bipartite(int p, int q) {
  Graph g(p + q);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b) g.add_edge(a, p + b);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw DomainError("graph: vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
}

int Graph::multiplicity(int a, int b) const {
  if (a == b) return 0;
  const auto it = edges_.find(ordered(a, b));
  return it == edges_.end() ? 0 : it->second;
}

bool Graph::is_simple() const {
  return loops_ == 0 && std::all_of(edges_.begin(), edges_.end(), [](const auto& kv) { return kv.second == 1; });
}

std::vector<Graph::Pair> Graph::simple_edges() const {
  std::vector<Pair> out;
  out.reserve(edges_.size());
  for (const auto& kv : edges_) out.push_back(kv.first);
  return out;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (const auto& kv : edges_) d += (kv.first.first == v || kv.first.second == v) ? 1 : 0;
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (const auto& kv : edges_) {
    if (kv.first.first == v) out.push_back(kv.first.second);
    if (kv.first.second == v) out.push_back(kv.first.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::underlying_simple() const {
  Graph g(n_);
  for (const auto& kv : edges_) g.add_edge(kv.first.first, kv.first.second);
  return g;
}

std::vector<std::uint64_t> Graph::adjacency_rows() const {
  if (n_ > 64) throw GuardError("graph: adjacency rows need at most 64 vertices");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
  for (const auto& kv : edges_) {
    const auto [a, b] = kv.first;
    rows[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    rows[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
  }
  return rows;
}

Graph Graph::from_adjacency_rows(int n, const std::vector<std::uint64_t>& rows) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if ((rows[static_cast<std::size_t>(a)] >> b) & 1U) g.add_edge(a, b);
  return g;
}

void Graph::add_edge(int a, int b, int count) {
  check_vertex(a);
  check_vertex(b);
  if (count <= 0) throw DomainError("graph: edge multiplicity must be positive");
  if (a == b) {
    loops_ += static_cast<std::size_t>(count);
    return;
  }
  edges_[ordered(a, b)] += count;
  edge_total_ += static_cast<std::size_t>(count);
}

void Graph::remove_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) {
    if (loops_ == 0) throw DomainError("graph: no loop to remove");
    --loops_;
    return;
  }
  const auto it = edges_.find(ordered(a, b));
  if (it == edges_.end()) {
    throw DomainError("graph: edge " + std::to_string(a) + "-" + std::to_string(b) + " not present");
  }
  if (--it->second == 0) edges_.erase(it);
  --edge_total_;
}

int Graph::add_vertex() { return n_++; }

std::string Graph::describe() const {
  std::ostringstream os;
  os << "n=" << n_ << " {";
  bool first = true;
  for (const auto& [pair, count] : edges_) {
    os << (first ? "" : ",") << pair.first << '-' << pair.second;
    if (count > 1) os << 'x' << count;
    first = false;
  }
  os << '}';
  if (loops_ > 0) os << " loops=" << loops_;
  return os.str();
}

void Witness::validate() const {
  if (graph.has_loop()) throw DomainError("witness: graph has a loop");
  if (!graph.has_edge(edge)) {
    throw DomainError("witness: edge " + std::to_string(edge.a) + "-" + std::to_string(edge.b) +
                      " not present in " + graph.describe());
  }
}

}  // namespace chromaspec
