#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chromaspec/graph.hpp"

namespace chromaspec {

inline constexpr int kDefaultCanonicalLimit = 12;

struct CanonicalLabeling {
  /// position[v] is the new label of vertex v.
  std::vector<int> position;
  /// graph6 of the relabeled graph.
  std::string form;
};

/// The labeling whose graph6 string is lexicographically smallest over all
/// n! vertex orders. Branch-and-bound on column-major prefixes; vertices with
/// identical neighborhoods (twins) are interchangeable, so only one per twin
/// class is tried at each depth. Requires a simple graph with n <= limit.
CanonicalLabeling canonical_labeling(const Graph& g, int limit = kDefaultCanonicalLimit);

/// graph6 bytes of the canonical labeling; equal iff the graphs are isomorphic.
std::string canonical_form(const Graph& g, int limit = kDefaultCanonicalLimit);

/// Same contract on bitmask rows (row v has bit u set iff uv is an edge).
std::string canonical_form_rows(std::span<const std::uint64_t> rows, int limit = kDefaultCanonicalLimit);

}  // namespace chromaspec
