#include "chromaspec/graph6.hpp"

#include <istream>
#include <ostream>

#include "chromaspec/errors.hpp"

namespace chromaspec {

namespace {

constexpr int kBias = 63;
constexpr long kMaxOrder = 258047;

void encode_order(std::string& out, long n) {
  if (n <= 62) {
    out += static_cast<char>(n + kBias);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kBias);
  }
}

int sextet(std::string_view text, std::size_t pos) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kBias + 63) {
    throw DomainError("graph6: character code " + std::to_string(c) + " out of range at offset " +
                      std::to_string(pos));
  }
  return c - kBias;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  if (!g.is_simple()) throw DomainError("graph6: only simple graphs can be encoded");
  const int n = g.order();
  if (n > kMaxOrder) throw DomainError("graph6: order too large");
  std::string out;
  encode_order(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + kBias);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + kBias);
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
  if (text.empty()) throw DomainError("graph6: empty input");
  std::size_t pos = 0;
  long n = sextet(text, pos++);
  if (n == 63) {
    if (text.size() < 4) throw DomainError("graph6: truncated order");
    if (sextet(text, pos) == 63) throw DomainError("graph6: orders beyond 258047 are not supported");
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | sextet(text, pos++);
  }
  const long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected) {
    throw DomainError("graph6: expected " + std::to_string(expected) + " characters, got " +
                      std::to_string(text.size()));
  }
  Graph g(static_cast<int>(n));
  long index = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++index) {
      const int byte = sextet(text, pos + static_cast<std::size_t>(index / 6));
      if ((byte >> (5 - index % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const int last = sextet(text, text.size() - 1);
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw DomainError("graph6: nonzero padding bits");
  }
  return g;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '>' && (line.rfind(">>graph6<<", 0) != 0 || line.size() == 10)) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace chromaspec
