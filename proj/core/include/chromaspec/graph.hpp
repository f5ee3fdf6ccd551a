#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace chromaspec {

/// A tracked edge, identified by its endpoints. Orientation is kept because
/// subdivision re-witnesses on the half at the first endpoint.
struct EdgeRef {
  int a = 0;
  int b = 1;

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

/// Loopless-by-default undirected multigraph on vertices 0..n-1.
///
/// Edges are stored as a multiset of unordered pairs. Loops are only produced
/// by contraction and are kept as a count; any loop makes the chromatic
/// polynomial identically zero.
class Graph {
 public:
  using Pair = std::pair<int, int>;

  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::initializer_list<Pair> edges);

  static Graph edgeless(int n) { return Graph(n); }
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete_bipartite(int p, int q);

  [[nodiscard]] int order() const noexcept { return n_; }
  /// Number of non-loop edges, counted with multiplicity.
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_total_; }
  [[nodiscard]] std::size_t loop_count() const noexcept { return loops_; }
  [[nodiscard]] bool has_loop() const noexcept { return loops_ > 0; }
  [[nodiscard]] int multiplicity(int a, int b) const;
  [[nodiscard]] bool has_edge(int a, int b) const { return multiplicity(a, b) > 0; }
  [[nodiscard]] bool has_edge(const EdgeRef& e) const { return has_edge(e.a, e.b); }
  [[nodiscard]] bool is_simple() const;
  [[nodiscard]] const std::map<Pair, int>& edge_multiset() const noexcept { return edges_; }
  /// Distinct vertex pairs (a < b), sorted.
  [[nodiscard]] std::vector<Pair> simple_edges() const;
  [[nodiscard]] int degree(int v) const;
  [[nodiscard]] std::vector<int> neighbors(int v) const;
  /// Collapses multiplicities and drops loops.
  [[nodiscard]] Graph underlying_simple() const;
  /// One bitmask row per vertex for the underlying simple graph; needs n <= 64.
  [[nodiscard]] std::vector<std::uint64_t> adjacency_rows() const;
  static Graph from_adjacency_rows(int n, const std::vector<std::uint64_t>& rows);

  /// Adds `count` parallel copies of ab; a == b adds loops.
  void add_edge(int a, int b, int count = 1);
  /// Removes one copy of ab; throws DomainError if absent.
  void remove_edge(int a, int b);
  int add_vertex();

  [[nodiscard]] std::string describe() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::map<Pair, int> edges_;
  std::size_t edge_total_ = 0;
  std::size_t loops_ = 0;
};

/// A graph together with a tracked edge.
struct Witness {
  Graph graph;
  EdgeRef edge;

  /// Throws DomainError unless the edge is present and the graph is loopless.
  void validate() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

}  // namespace chromaspec
