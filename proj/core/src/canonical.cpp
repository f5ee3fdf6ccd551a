#include "chromaspec/canonical.hpp"

#include <array>

#include "chromaspec/errors.hpp"

namespace chromaspec {

namespace {

class MinimumLabelSearch {
 public:
  explicit MinimumLabelSearch(std::span<const std::uint64_t> rows) : rows_(rows), n_(static_cast<int>(rows.size())) {
    for (int v = 0; v < n_; ++v) {
      twin_class_[v] = v;
      for (int u = 0; u < v; ++u) {
        const std::uint64_t bu = std::uint64_t{1} << u;
        const std::uint64_t bv = std::uint64_t{1} << v;
        if ((rows_[u] & ~bv) == (rows_[v] & ~bu)) {
          twin_class_[v] = twin_class_[u];
          break;
        }
      }
    }
  }

  void run() { descend(0, true); }

  [[nodiscard]] const std::array<int, 64>& best_order() const { return best_order_; }
  [[nodiscard]] std::span<const std::uint64_t> best_columns() const { return {best_col_.data(), static_cast<std::size_t>(n_)}; }

 private:
  // `less`: the current prefix is already smaller than the best prefix.
  void descend(int depth, bool less) {
    if (depth == n_) {
      if (less) {
        best_col_ = col_;
        best_order_ = order_;
        ++generation_;
      }
      return;
    }
    std::uint64_t tried = 0;
    for (int v = 0; v < n_; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (used_ & bit) continue;
      const std::uint64_t cls = std::uint64_t{1} << twin_class_[v];
      if (tried & cls) continue;
      tried |= cls;

      std::uint64_t column = 0;
      for (int i = 0; i < depth; ++i) column = (column << 1) | ((rows_[order_[i]] >> v) & 1U);
      bool child_less = less;
      if (!less) {
        if (column > best_col_[depth]) continue;
        child_less = column < best_col_[depth];
      }
      order_[depth] = v;
      col_[depth] = column;
      used_ |= bit;
      const unsigned long before = generation_;
      descend(depth + 1, child_less);
      used_ &= ~bit;
      // A new best was found below, so it shares this frame's prefix.
      if (generation_ != before) less = false;
    }
  }

  std::span<const std::uint64_t> rows_;
  int n_;
  std::array<int, 64> twin_class_{};
  std::array<int, 64> order_{};
  std::array<int, 64> best_order_{};
  std::array<std::uint64_t, 64> col_{};
  std::array<std::uint64_t, 64> best_col_{};
  std::uint64_t used_ = 0;
  unsigned long generation_ = 0;
};

void check_limit(int n, int limit) {
  if (n > limit) {
    throw GuardError("canonical form: order " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  }
}

std::string encode_columns(int n, std::span<const std::uint64_t> columns) {
  std::string out;
  out += static_cast<char>(n + 63);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((columns[static_cast<std::size_t>(j)] >> (j - 1 - i)) & 1U);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, int limit) {
  if (!g.is_simple()) throw DomainError("canonical form: graph must be simple");
  check_limit(g.order(), limit);
  const auto rows = g.adjacency_rows();
  MinimumLabelSearch search(rows);
  search.run();
  CanonicalLabeling out;
  out.position.resize(static_cast<std::size_t>(g.order()));
  for (int p = 0; p < g.order(); ++p) out.position[static_cast<std::size_t>(search.best_order()[p])] = p;
  out.form = encode_columns(g.order(), search.best_columns());
  return out;
}

std::string canonical_form(const Graph& g, int limit) { return canonical_labeling(g, limit).form; }

std::string canonical_form_rows(std::span<const std::uint64_t> rows, int limit) {
  const int n = static_cast<int>(rows.size());
  check_limit(n, limit);
  if (n > 62) throw GuardError("canonical form: order too large");
  MinimumLabelSearch search(rows);
  search.run();
  return encode_columns(n, search.best_columns());
}

}  // namespace chromaspec
