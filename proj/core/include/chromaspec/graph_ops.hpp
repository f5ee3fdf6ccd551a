#pragma once

#include <span>

#include "chromaspec/graph.hpp"

namespace chromaspec {

/// G - e: removes one copy of e.
Graph delete_edge(const Graph& g, const EdgeRef& e);

/// G / e: merges the endpoints into min(a, b); vertices above max(a, b)
/// shift down by one. Remaining parallel copies of e become loops.
Graph contract_edge(const Graph& g, const EdgeRef& e);

/// Replaces e = ab by the path a-w-b with a new vertex w = n and tracks aw.
Witness subdivide(const Witness& w);

/// Adds a vertex n adjacent to both endpoints of the tracked edge.
Witness add_apex(const Witness& w);

/// Attaches a pendant vertex n to v.
Graph add_leaf(const Graph& g, int v);

/// G v K_m: m new mutually adjacent vertices joined to every vertex of G.
Graph join_clique(const Graph& g, int m);

/// Renames vertex v to perm[v]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace chromaspec
