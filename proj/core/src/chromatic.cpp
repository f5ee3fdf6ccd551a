#include "chromaspec/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <mutex>
#include <sstream>
#include <vector>

#include "chromaspec/errors.hpp"
#include "chromaspec/graph_ops.hpp"

namespace chromaspec {

std::optional<Poly> ChromaticCache::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  const auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void ChromaticCache::insert(const std::string& key, const Poly& value) {
  std::unique_lock lock(mutex_);
  table_[key] = value;
}

std::size_t ChromaticCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void ChromaticCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

void ChromaticCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cache: cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kFileHeader) {
    throw DomainError("cache: unsupported header in " + path.string());
  }
  std::unordered_map<std::string, Poly> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw DomainError("cache: malformed record in " + path.string());
    std::vector<Integer> coeffs;
    std::istringstream fields(line.substr(tab + 1));
    std::string field;
    while (std::getline(fields, field, ',')) {
      Integer c;
      if (c.set_str(field, 10) != 0) throw DomainError("cache: malformed coefficient in " + path.string());
      coeffs.push_back(c);
    }
    records.emplace(line.substr(0, tab), Poly(std::move(coeffs)));
  }
  std::unique_lock lock(mutex_);
  for (auto& [key, value] : records) table_[key] = std::move(value);
}

void ChromaticCache::save(const std::filesystem::path& path) const {
  std::vector<std::pair<std::string, Poly>> records;
  {
    std::shared_lock lock(mutex_);
    records.assign(table_.begin(), table_.end());
  }
  std::sort(records.begin(), records.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DomainError("cache: cannot write " + path.string());
  out << kFileHeader << '\n';
  for (const auto& [key, poly] : records) {
    out << key << '\t';
    for (std::size_t k = 0; k < poly.coeffs().size(); ++k) out << (k ? "," : "") << poly.coeffs()[k].get_str();
    out << '\n';
  }
}

// Simple graph on at most 64 vertices as adjacency bitmasks.
struct ChromaticEngine::Reduced {
  std::vector<std::uint64_t> rows;

  [[nodiscard]] int order() const { return static_cast<int>(rows.size()); }

  void remove_vertex(int v) {
    const std::uint64_t low = (std::uint64_t{1} << v) - 1;
    rows.erase(rows.begin() + v);
    for (auto& row : rows) row = (row & low) | ((row >> (v + 1)) << v);
  }

  [[nodiscard]] Reduced deleted(int a, int b) const {
    Reduced out = *this;
    out.rows[static_cast<std::size_t>(a)] &= ~(std::uint64_t{1} << b);
    out.rows[static_cast<std::size_t>(b)] &= ~(std::uint64_t{1} << a);
    return out;
  }

  // Merges b into a (a < b), collapsing parallel edges, then drops b.
  [[nodiscard]] Reduced contracted(int a, int b) const {
    Reduced out = *this;
    const std::uint64_t bit_a = std::uint64_t{1} << a;
    const std::uint64_t bit_b = std::uint64_t{1} << b;
    out.rows[static_cast<std::size_t>(a)] |= out.rows[static_cast<std::size_t>(b)];
    out.rows[static_cast<std::size_t>(a)] &= ~(bit_a | bit_b);
    for (std::size_t u = 0; u < out.rows.size(); ++u) {
      if (static_cast<int>(u) != a && (out.rows[u] & bit_b)) out.rows[u] |= bit_a;
    }
    out.remove_vertex(b);
    return out;
  }

  [[nodiscard]] std::vector<std::uint64_t> components() const {
    std::vector<std::uint64_t> out;
    std::uint64_t seen = 0;
    const int n = order();
    for (int s = 0; s < n; ++s) {
      if (seen & (std::uint64_t{1} << s)) continue;
      std::uint64_t comp = std::uint64_t{1} << s;
      std::uint64_t frontier = comp;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint64_t fresh = rows[static_cast<std::size_t>(v)] & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      seen |= comp;
      out.push_back(comp);
    }
    return out;
  }

  [[nodiscard]] Reduced induced(std::uint64_t mask) const {
    std::vector<int> keep;
    for (std::uint64_t m = mask; m; m &= m - 1) keep.push_back(std::countr_zero(m));
    Reduced out;
    out.rows.assign(keep.size(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = 0; j < keep.size(); ++j) {
        if ((rows[static_cast<std::size_t>(keep[i])] >> keep[j]) & 1U) out.rows[i] |= std::uint64_t{1} << j;
      }
    }
    return out;
  }
};

ChromaticEngine::ChromaticEngine(ChromaticOptions options, std::shared_ptr<ChromaticCache> cache)
    : options_(options), cache_(cache ? std::move(cache) : std::make_shared<ChromaticCache>()) {}

Poly ChromaticEngine::chromatic_poly(const Graph& g) const {
  if (g.has_loop()) return {};
  return solve(Reduced{g.adjacency_rows()});
}

Poly ChromaticEngine::solve(Reduced g) const {
  unsigned isolated = 0;
  unsigned pendant = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < g.order(); ++v) {
      const int deg = std::popcount(g.rows[static_cast<std::size_t>(v)]);
      if (deg <= 1) {
        (deg == 0 ? isolated : pendant) += 1;
        g.remove_vertex(v);
        changed = true;
        break;
      }
    }
  }

  Poly core = Poly::constant(1);
  if (g.order() > 0) {
    const auto parts = g.components();
    if (parts.size() == 1) {
      core = solve_connected(g);
    } else {
      for (std::uint64_t mask : parts) core *= solve(g.induced(mask));
    }
  }
  if (isolated > 0) core *= Poly::monomial(isolated);
  for (unsigned i = 0; i < pendant; ++i) core *= Poly::linear_root(1);
  return core;
}

Poly ChromaticEngine::solve_connected(const Reduced& g) const {
  const bool cacheable = options_.use_cache && g.order() <= options_.canonical_limit;
  std::string key;
  if (cacheable) {
    key = canonical_form_rows(g.rows, options_.canonical_limit);
    if (auto hit = cache_->find(key)) return *std::move(hit);
  }

  int a = 0;
  while ((g.rows[static_cast<std::size_t>(a)] >> (a + 1)) == 0) ++a;
  const int b = std::countr_zero(g.rows[static_cast<std::size_t>(a)] >> (a + 1)) + a + 1;

  Poly result = solve(g.deleted(a, b)) - solve(g.contracted(a, b));
  if (cacheable) cache_->insert(key, result);
  return result;
}

ChromaticEngine& default_engine() {
  static ChromaticEngine engine;
  return engine;
}

Poly chromatic_poly(const Graph& g) { return default_engine().chromatic_poly(g); }

Integer count_colorings(const Graph& g, unsigned k, std::uint64_t budget) {
  if (k == 0) throw DomainError("count_colorings: k must be positive");
  const int n = g.order();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > budget / k) {
      throw GuardError("count_colorings: " + std::to_string(k) + "^" + std::to_string(n) + " exceeds budget");
    }
    total *= k;
  }
  if (g.has_loop()) return 0;
  const auto edges = g.simple_edges();
  std::vector<unsigned> color(static_cast<std::size_t>(n), 0);
  Integer count = 0;
  for (std::uint64_t step = 0; step < total; ++step) {
    bool proper = true;
    for (const auto& [a, b] : edges) {
      if (color[static_cast<std::size_t>(a)] == color[static_cast<std::size_t>(b)]) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    for (int i = 0; i < n; ++i) {
      if (++color[static_cast<std::size_t>(i)] < k) break;
      color[static_cast<std::size_t>(i)] = 0;
    }
  }
  return count;
}

Scalar z_value(const Graph& g, const Scalar& lambda, const ChromaticEngine& engine) {
  const Scalar p = engine.chromatic_poly(g).eval(-lambda);
  return g.order() % 2 == 0 ? p : -p;
}

bool check_additive_dc(const Graph& g, const EdgeRef& e, const Scalar& lambda, const ChromaticEngine& engine) {
  return z_value(g, lambda, engine) ==
         z_value(delete_edge(g, e), lambda, engine) + z_value(contract_edge(g, e), lambda, engine);
}

bool check_polyid(const Graph& g, const EdgeRef& e, const ChromaticEngine& engine) {
  const Graph h = delete_edge(add_apex({g, e}).graph, e);
  const Poly rhs =
      engine.chromatic_poly(contract_edge(g, e)) + Poly::linear_root(2) * engine.chromatic_poly(delete_edge(g, e));
  return engine.chromatic_poly(h) == rhs;
}

bool check_join_shift(const Graph& g, int m, const ChromaticEngine& engine) {
  const Poly lhs = engine.chromatic_poly(join_clique(g, m));
  const Poly rhs = Poly::falling_factorial(static_cast<unsigned>(m)) * engine.chromatic_poly(g).shifted(m);
  return lhs == rhs;
}

bool check_leaf_identity(const Graph& g, int v, const ChromaticEngine& engine) {
  return engine.chromatic_poly(add_leaf(g, v)) == Poly::linear_root(1) * engine.chromatic_poly(g);
}

bool has_alternating_signs(const Poly& p, int n) {
  if (p.degree() != n || p.leading() != 1) return false;
  for (int k = 0; k <= n; ++k) {
    const int s = sgn(p.coeff(static_cast<std::size_t>(n - k)));
    if (s != 0 && s != (k % 2 == 0 ? 1 : -1)) return false;
  }
  return true;
}

}  // namespace chromaspec
