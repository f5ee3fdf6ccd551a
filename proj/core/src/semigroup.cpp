#include "chromaspec/semigroup.hpp"

#include "chromaspec/errors.hpp"
#include "chromaspec/graph_ops.hpp"

namespace chromaspec {

Word parse_word(std::string_view text) {
  Word out;
  for (char c : text) {
    switch (c) {
      case 'S': out.push_back(Letter::S); break;
      case 'B': out.push_back(Letter::B); break;
      case 'D':
        out.push_back(Letter::S);
        out.push_back(Letter::S);
        break;
      default: throw DomainError(std::string("word: unknown letter '") + c + "'");
    }
  }
  return out;
}

std::string word_to_string(const Word& word) {
  std::string out;
  out.reserve(word.size());
  for (Letter l : word) out.push_back(static_cast<char>(l));
  return out;
}

Word repeat_word(const Word& word, unsigned times) {
  Word out;
  out.reserve(word.size() * times);
  for (unsigned i = 0; i < times; ++i) out.insert(out.end(), word.begin(), word.end());
  return out;
}

Word concat(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

Mat2 op_matrix(Letter letter, const Evaluation& eval) {
  const Scalar q = eval.q();
  if (q.is_zero() || q == Scalar(1) || q == Scalar(2)) {
    throw DomainError("operation matrices are degenerate at q = " + q.to_string());
  }
  const Scalar& p = eval.param;
  if (eval.mode == Mode::Feasible) {
    if (letter == Letter::S) return {1, 1, 0, p + 1};
    return {p + 1, 0, 1, p + 2};
  }
  if (letter == Letter::S) return {-1, 1, 0, p - 1};
  return {p - 1, 0, 1, p - 2};
}

Mat2 word_matrix(const Word& word, const Evaluation& eval) {
  const Mat2 s = op_matrix(Letter::S, eval);
  const Mat2 b = op_matrix(Letter::B, eval);
  Mat2 out;
  for (Letter l : word) out = (l == Letter::S ? s : b) * out;
  return out;
}

Mat2 sign_matrix(int n) {
  const int first = n % 2 == 0 ? -1 : 1;
  return Mat2::diagonal(first, -first);
}

Vec2 feasible_vector(const Witness& w, const Scalar& lambda, const ChromaticEngine& engine) {
  w.validate();
  return {z_value(contract_edge(w.graph, w.edge), lambda, engine), z_value(delete_edge(w.graph, w.edge), lambda, engine)};
}

Vec2 attainable_vector(const Witness& w, const Scalar& q, const ChromaticEngine& engine) {
  w.validate();
  return {engine.chromatic_poly(contract_edge(w.graph, w.edge)).eval(q),
          engine.chromatic_poly(delete_edge(w.graph, w.edge)).eval(q)};
}

Vec2 witness_vector(const Witness& w, const Evaluation& eval, const ChromaticEngine& engine) {
  return eval.mode == Mode::Feasible ? feasible_vector(w, eval.param, engine) : attainable_vector(w, eval.param, engine);
}

Witness apply_letter(const Witness& w, Letter letter) {
  return letter == Letter::S ? subdivide(w) : add_apex(w);
}

Witness apply_word_graph(const Word& word, Witness start) {
  for (Letter l : word) start = apply_letter(start, l);
  return start;
}

Vec2 predict_vector(const Word& word, const Vec2& start, const Evaluation& eval) {
  if (word.empty()) return start;
  const Mat2 s = op_matrix(Letter::S, eval);
  const Mat2 b = op_matrix(Letter::B, eval);
  Vec2 v = start;
  for (Letter l : word) v = (l == Letter::S ? s : b) * v;
  return v;
}

Scalar ratio(const Vec2& v) {
  if (v.y.is_zero()) throw DomainError("ratio: zero denominator in " + v.to_string());
  return v.x / v.y;
}

Mobius ratio_map(const Word& word, const Evaluation& eval) {
  const Mat2 m = word_matrix(word, eval);
  if (m.det().is_zero()) throw DomainError("ratio_map: singular block " + word_to_string(word));
  return Mobius::from_matrix(m);
}

Mat2 third_op_matrix(const Scalar& lambda) { return {1, 1, lambda + 1, lambda + 1}; }

Witness apply_third_op(const Witness& w) {
  Witness out = add_apex(w);
  out.edge = {out.graph.order() - 1, w.edge.a};
  return out;
}

bool check_singular_third_op(const Scalar& lambda) { return third_op_matrix(lambda).det().is_zero(); }

Witness seed_witness(Seed seed) { return {Graph::complete(seed_order(seed)), {0, 1}}; }

int seed_order(Seed seed) {
  switch (seed) {
    case Seed::K2: return 2;
    case Seed::K3: return 3;
    case Seed::K4: return 4;
  }
  return 0;
}

std::string to_string(Seed seed) { return "K" + std::to_string(seed_order(seed)); }

Seed parse_seed(std::string_view text) {
  if (text == "K2") return Seed::K2;
  if (text == "K3") return Seed::K3;
  if (text == "K4") return Seed::K4;
  throw DomainError("unknown seed '" + std::string(text) + "' (expected K2, K3 or K4)");
}

}  // namespace chromaspec
