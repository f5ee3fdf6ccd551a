#include "chromaspec/constructive.hpp"

#include <algorithm>
#include <thread>

#include "chromaspec/errors.hpp"
#include "chromaspec/graph_ops.hpp"
#include "chromaspec/graph_props.hpp"

namespace chromaspec {
namespace {

Integer fibonacci(int k) {
  Integer a = 0;
  Integer b = 1;
  for (int i = 0; i < k; ++i) {
    Integer next = a + b;
    a = b;
    b = next;
  }
  return a;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// All words over {K, L} with lengths |K|*#K + |L|*#L == total, in lexicographic order.
void mixed_words(int k_len, int l_len, int total, BlockWord& prefix, std::vector<BlockWord>& out, std::size_t cap) {
  if (total == 0) {
    if (out.size() >= cap) throw GuardError("word plan exceeds " + std::to_string(cap) + " words");
    out.push_back(prefix);
    return;
  }
  for (bool letter : {false, true}) {
    const int len = letter ? l_len : k_len;
    if (len > total) continue;
    prefix.push_back(letter);
    mixed_words(k_len, l_len, total - len, prefix, out, cap);
    prefix.pop_back();
  }
}

void balanced_words(int ks, int ls, BlockWord& prefix, std::vector<BlockWord>& out) {
  if (ks == 0 && ls == 0) {
    out.push_back(prefix);
    return;
  }
  if (ks > 0) {
    prefix.push_back(false);
    balanced_words(ks - 1, ls, prefix, out);
    prefix.pop_back();
  }
  if (ls > 0) {
    prefix.push_back(true);
    balanced_words(ks, ls - 1, prefix, out);
    prefix.pop_back();
  }
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

WordPlan plan_words(const Regime& regime, int n) {
  const int n0 = seed_order(regime.seed);
  if (n < n0) throw DomainError("order " + std::to_string(n) + " is below the seed order " + std::to_string(n0));
  WordPlan plan;
  plan.n = n;
  const int k_len = regime.block_vertices_k();
  const int l_len = regime.block_vertices_l();
  const std::size_t cap = std::size_t{1} << 22;
  BlockWord prefix;

  if (regime.kind == RegimeKind::Negative) {
    plan.blocks = n - n0;
    if (plan.blocks > 22) throw GuardError("word plan exceeds 2^22 words");
    mixed_words(k_len, l_len, plan.blocks, prefix, plan.words, cap);
    plan.expected_count = Integer(1) << plan.blocks;
  } else if (regime.mixed_lengths) {
    mixed_words(k_len, l_len, n - n0, prefix, plan.words, cap);
    plan.expected_count = fibonacci(n - 2);
  } else {
    plan.blocks = (n - n0) / (k_len + l_len);
    plan.padding = n - n0 - plan.blocks * (k_len + l_len);
    if (binomial(static_cast<unsigned>(2 * plan.blocks), static_cast<unsigned>(plan.blocks)) > Integer(cap)) {
      throw GuardError("word plan exceeds 2^22 words");
    }
    balanced_words(plan.blocks, plan.blocks, prefix, plan.words);
    plan.expected_count = binomial(static_cast<unsigned>(2 * plan.blocks), static_cast<unsigned>(plan.blocks));
  }
  return plan;
}

Word expand_block_word(const Regime& regime, const BlockWord& word) {
  Word out;
  for (bool letter : word) {
    const Word& block = letter ? regime.l_block : regime.k_block;
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

ConstructiveReport distinct_witness_values(int n, const Scalar& q, const ConstructiveOptions& options) {
  return distinct_witness_values(n, regime_for(q), options);
}

ConstructiveReport distinct_witness_values(int n, const Regime& regime, const ConstructiveOptions& options) {
  const Certificate cert = pingpong_certify(regime);
  if (!cert.certified) throw CertificationError("regime does not certify: " + cert.failure());

  ConstructiveReport report;
  report.q = regime.q;
  report.n = n;
  report.regime = regime;
  report.plan = plan_words(regime, n);
  if (report.plan.words.size() > options.max_words) {
    throw GuardError("word plan has " + std::to_string(report.plan.words.size()) + " words");
  }
  const auto& words = report.plan.words;
  const ChromaticEngine& engine = options.engine ? *options.engine : default_engine();

  const Vec2 base = witness_vector(seed_witness(regime.seed), regime.eval, engine);
  const Mat2 mk = word_matrix(regime.k_block, regime.eval);
  const Mat2 ml = word_matrix(regime.l_block, regime.eval);
  std::vector<Vec2> vectors(words.size());
  parallel_for(words.size(), options.threads, [&](std::size_t i) {
    Vec2 v = base;
    for (bool letter : words[i]) v = (letter ? ml : mk) * v;
    vectors[i] = std::move(v);
  });

  std::vector<std::pair<Scalar, std::size_t>> ratios;
  ratios.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) ratios.emplace_back(ratio(vectors[i]), i);
  std::sort(ratios.begin(), ratios.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    if (ratios[i - 1].first == ratios[i].first) {
      throw CertificationError("ratio collision between block words " + std::to_string(ratios[i - 1].second) + " and " +
                               std::to_string(ratios[i].second) + " at " + ratios[i].first.to_string());
    }
  }

  const Scalar pad = (regime.q - 1).pow(static_cast<unsigned>(report.plan.padding));
  const bool feasible = regime.eval.mode == Mode::Feasible;
  const bool flip = feasible && n % 2 == 1;
  auto values_of = [&](const Vec2& v) -> std::pair<Scalar, Scalar> {
    if (feasible) return {flip ? -v.y : v.y, flip ? -(v.x + v.y) : v.x + v.y};
    return {v.y * pad, (v.y - v.x) * pad};
  };

  std::vector<Scalar> values;
  values.reserve(2 * words.size());
  for (const auto& v : vectors) {
    auto [deleted, full] = values_of(v);
    values.push_back(std::move(deleted));
    values.push_back(std::move(full));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  report.values = std::move(values);
  report.counts_match = Integer(static_cast<unsigned long>(words.size())) == report.plan.expected_count;
  const Integer size = static_cast<unsigned long>(report.values.size());
  report.sqrt_bound_holds = size * size >= Integer(static_cast<unsigned long>(words.size()));

  if (options.audit) {
    report.audited = true;
    std::vector<std::string> failures(words.size());
    parallel_for(words.size(), options.threads, [&](std::size_t i) {
      Witness w = apply_word_graph(expand_block_word(regime, words[i]), seed_witness(regime.seed));
      for (int p = 0; p < report.plan.padding; ++p) w.graph = add_leaf(w.graph, 0);
      const Graph deleted = delete_edge(w.graph, w.edge);
      std::string why;
      if (w.graph.order() != n) why = "order " + std::to_string(w.graph.order());
      else if (!w.graph.is_simple()) why = "not simple";
      else if (!is_planar(w.graph)) why = "not planar";
      else {
        const Scalar p_deleted = engine.chromatic_poly(deleted).eval(regime.q);
        const Scalar p_full = engine.chromatic_poly(w.graph).eval(regime.q);
        if (std::pair{p_deleted, p_full} != values_of(vectors[i])) why = "values differ from prediction";
      }
      if (!why.empty()) failures[i] = "word " + word_to_string(expand_block_word(regime, words[i])) + ": " + why;
    });
    for (auto& f : failures) {
      if (!f.empty()) report.audit_failures.push_back(std::move(f));
    }
    report.audit_passed = report.audit_failures.empty();
  }
  return report;
}

}  // namespace chromaspec
