#include "chromaspec/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>

#include "chromaspec/errors.hpp"
#include "chromaspec/graph6.hpp"
#include "chromaspec/graph_ops.hpp"
#include "chromaspec/semigroup.hpp"

namespace chromaspec {
namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Random simple graph on lo..n_max vertices, with at least one edge when n >= 2.
Graph random_graph(Rng& rng, int lo, int n_max) {
  const int n = uniform(rng, lo, std::max(lo, n_max));
  for (;;) {
    Graph g(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (uniform(rng, 0, 1)) g.add_edge(a, b);
      }
    }
    if (g.edge_count() > 0 || n < 2) return g;
  }
}

EdgeRef random_edge(Rng& rng, const Graph& g) {
  const auto edges = g.simple_edges();
  const auto& [a, b] = edges[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(edges.size()) - 1))];
  return uniform(rng, 0, 1) ? EdgeRef{a, b} : EdgeRef{b, a};
}

Scalar random_positive(Rng& rng) { return Scalar(Rational(uniform(rng, 1, 12), uniform(rng, 1, 7))); }

// Nonzero rational q away from {0, 1, 2}, of either sign.
Scalar random_q(Rng& rng) {
  for (;;) {
    Scalar q(Rational(uniform(rng, -24, 24), uniform(rng, 1, 8)));
    if (!q.is_zero() && q != Scalar(1) && q != Scalar(2)) return q;
  }
}

Witness random_witness(Rng& rng, int max_letters) {
  const Seed seed = std::array{Seed::K2, Seed::K3, Seed::K4}[static_cast<std::size_t>(uniform(rng, 0, 2))];
  Word word;
  const int len = uniform(rng, 0, max_letters);
  for (int i = 0; i < len; ++i) word.push_back(uniform(rng, 0, 1) ? Letter::S : Letter::B);
  return apply_word_graph(word, seed_witness(seed));
}

struct Context {
  Rng rng;
  const VerifyOptions& options;
  const ChromaticEngine& engine;
};

// Each lemma runs one instance and returns an empty string on success.
using Instance = std::function<std::string(Context&)>;

std::string describe(const Graph& g) { return graph6_encode(g.underlying_simple()); }

std::string deletion_contraction(Context& c) {
  const Graph g = random_graph(c.rng, 2, c.options.n_max);
  const EdgeRef e = random_edge(c.rng, g);
  const Poly lhs = c.engine.chromatic_poly(g);
  const Poly rhs = c.engine.chromatic_poly(delete_edge(g, e)) - c.engine.chromatic_poly(contract_edge(g, e));
  return lhs == rhs ? "" : describe(g);
}

std::string additive_dc(Context& c) {
  const Graph g = random_graph(c.rng, 2, c.options.n_max);
  const EdgeRef e = random_edge(c.rng, g);
  const Scalar lambda = random_positive(c.rng);
  if (!check_additive_dc(g, e, lambda, c.engine)) return describe(g) + " at lambda " + lambda.to_string();
  if (z_value(g, lambda, c.engine).sign() <= 0) return describe(g) + ": Z not positive at " + lambda.to_string();
  return "";
}

std::string leaf(Context& c) {
  const Graph g = random_graph(c.rng, 1, c.options.n_max);
  const int v = uniform(c.rng, 0, g.order() - 1);
  return check_leaf_identity(g, v, c.engine) ? "" : describe(g);
}

std::string polyid(Context& c) {
  const Graph g = random_graph(c.rng, 2, c.options.n_max);
  const EdgeRef e = random_edge(c.rng, g);
  return check_polyid(g, e, c.engine) ? "" : describe(g);
}

std::string join_shift(Context& c) {
  const Graph g = random_graph(c.rng, 1, std::min(c.options.n_max, 6));
  const int m = uniform(c.rng, 1, 3);
  return check_join_shift(g, m, c.engine) ? "" : describe(g) + " with m " + std::to_string(m);
}

std::string alternating_signs(Context& c) {
  const Graph g = random_graph(c.rng, 1, c.options.n_max);
  return has_alternating_signs(c.engine.chromatic_poly(g), g.order()) ? "" : describe(g);
}

std::string sign_bridge(Context& c) {
  const Witness w = random_witness(c.rng, 6);
  const Scalar q = random_q(c.rng);
  const Vec2 lhs = attainable_vector(w, q, c.engine);
  const Vec2 rhs = sign_matrix(w.graph.order()) * feasible_vector(w, -q, c.engine);
  return lhs.x == rhs.x && lhs.y == rhs.y ? "" : describe(w.graph) + " at q " + q.to_string();
}

std::string matrix_action(Context& c) {
  const Seed seed = std::array{Seed::K2, Seed::K3, Seed::K4}[static_cast<std::size_t>(uniform(c.rng, 0, 2))];
  Word word;
  const int len = uniform(c.rng, 0, 6);
  for (int i = 0; i < len; ++i) word.push_back(uniform(c.rng, 0, 1) ? Letter::S : Letter::B);
  const Scalar q = random_q(c.rng);
  const Evaluation eval = uniform(c.rng, 0, 1) && q.sign() < 0 ? Evaluation::feasible(-q) : Evaluation::attainable(q);
  const Witness start = seed_witness(seed);
  const Vec2 predicted = predict_vector(word, witness_vector(start, eval, c.engine), eval);
  const Vec2 actual = witness_vector(apply_word_graph(word, start), eval, c.engine);
  return predicted.x == actual.x && predicted.y == actual.y ? "" : word_to_string(word) + " at q " + q.to_string();
}

std::string telescoping(Context& c) {
  Scalar q = random_q(c.rng);
  const unsigned m = static_cast<unsigned>(uniform(c.rng, 1, 6));
  const Scalar scale = (q - 1).pow(2 * m);
  const Mobius closed{1, (scale - 1) / q, 0, scale};
  const Mobius computed = ratio_map(repeat_word(parse_word("S"), 2 * m), Evaluation::attainable(q));
  return computed.equivalent(closed) ? "" : "q " + q.to_string() + " m " + std::to_string(m);
}

std::string singular_third_op(Context& c) {
  const Scalar lambda = random_positive(c.rng);
  if (!check_singular_third_op(lambda)) return "lambda " + lambda.to_string();
  const Witness w = random_witness(c.rng, 5);
  const Vec2 expected = third_op_matrix(lambda) * feasible_vector(w, lambda, c.engine);
  const Vec2 actual = feasible_vector(apply_third_op(w), lambda, c.engine);
  return expected.x == actual.x && expected.y == actual.y ? "" : describe(w.graph) + " at lambda " + lambda.to_string();
}

// Random graphs on at most six vertices, checked at k = 1..k_max.
std::string coloring_oracle(Context& c) {
  const Graph g = random_graph(c.rng, 1, std::min(c.options.n_max, 6));
  const Poly p = c.engine.chromatic_poly(g);
  for (int k = 1; k <= c.options.k_max; ++k) {
    if (p.eval(Integer(k)) != count_colorings(g, static_cast<unsigned>(k))) return describe(g) + " at k " + std::to_string(k);
  }
  return "";
}

const std::vector<std::pair<std::string, Instance>>& registry() {
  static const std::vector<std::pair<std::string, Instance>> lemmas{
      {"deletion-contraction", deletion_contraction},
      {"additive-dc", additive_dc},
      {"leaf", leaf},
      {"polyid", polyid},
      {"join-shift", join_shift},
      {"alternating-signs", alternating_signs},
      {"sign-bridge", sign_bridge},
      {"matrix-action", matrix_action},
      {"telescoping", telescoping},
      {"singular-third-op", singular_third_op},
      {"coloring-oracle", coloring_oracle},
  };
  return lemmas;
}

}  // namespace

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<LemmaResult> run_verify(const VerifyOptions& options, const ChromaticEngine& engine) {
  if (!options.lemma.empty() && std::find(lemma_names().begin(), lemma_names().end(), options.lemma) == lemma_names().end()) {
    throw DomainError("unknown lemma '" + options.lemma + "'");
  }
  if (options.n_max < 2) throw DomainError("n-max must be at least 2");
  std::vector<LemmaResult> results;
  std::uint64_t salt = 0;
  for (const auto& [name, fn] : registry()) {
    ++salt;
    if (!options.lemma.empty() && options.lemma != name) continue;
    Context ctx{Rng(options.seed ^ (salt * 0x9E3779B97F4A7C15ULL)), options, engine};
    LemmaResult r;
    r.name = name;
    for (std::size_t i = 0; i < options.instances; ++i) {
      ++r.instances;
      std::string failure;
      try {
        failure = fn(ctx);
      } catch (const Error& e) {
        failure = e.what();
      }
      if (!failure.empty()) {
        if (r.failures++ == 0) r.first_failure = failure;
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace chromaspec
