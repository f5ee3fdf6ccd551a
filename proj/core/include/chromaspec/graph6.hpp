#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chromaspec/graph.hpp"

namespace chromaspec {

/// Standard graph6 encoding of a simple graph: order prefix, then the upper
/// triangle in column-major order packed six bits per byte, each byte + 63.
std::string graph6_encode(const Graph& g);
/// Throws DomainError on malformed input.
Graph graph6_decode(std::string_view text);

/// One graph per line; blank lines and lines starting with '>' are skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);
void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace chromaspec
