#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chromaspec/chromatic.hpp"
#include "chromaspec/graph.hpp"
#include "chromaspec/interval.hpp"
#include "chromaspec/linalg.hpp"
#include "chromaspec/scalar.hpp"

namespace chromaspec {

/// S subdivides the witnessed edge and re-witnesses on the new half at the
/// first endpoint; B adds an apex over the witnessed edge.
enum class Letter : char { S = 'S', B = 'B' };

using Word = std::vector<Letter>;

/// Parses letters S, B and D (shorthand for SS). The empty string is the empty word.
Word parse_word(std::string_view text);
std::string word_to_string(const Word& word);
Word repeat_word(const Word& word, unsigned times);
Word concat(const Word& lhs, const Word& rhs);

enum class Mode { Feasible, Attainable };

/// Either feasible mode at lambda (vectors of Z values) or attainable mode at q
/// (vectors of P values).
struct Evaluation {
  Mode mode = Mode::Attainable;
  Scalar param;

  static Evaluation feasible(const Scalar& lambda) { return {Mode::Feasible, lambda}; }
  static Evaluation attainable(const Scalar& q) { return {Mode::Attainable, q}; }
  /// The evaluation point of the chromatic polynomial, -lambda or q.
  [[nodiscard]] Scalar q() const { return mode == Mode::Feasible ? -param : param; }
};

/// Throws DomainError at q in {0, 1, 2} (lambda in {0, -1, -2}).
Mat2 op_matrix(Letter letter, const Evaluation& eval);
/// M_{a_t} ... M_{a_1}: the first letter acts first.
Mat2 word_matrix(const Word& word, const Evaluation& eval);
/// diag((-1)^{n-1}, (-1)^n), taking feasible vectors at -q to attainable ones at q.
Mat2 sign_matrix(int n);

/// (Z_{G/e}(lambda), Z_{G-e}(lambda)).
Vec2 feasible_vector(const Witness& w, const Scalar& lambda, const ChromaticEngine& engine = default_engine());
/// (P_{G/e}(q), P_{G-e}(q)).
Vec2 attainable_vector(const Witness& w, const Scalar& q, const ChromaticEngine& engine = default_engine());
Vec2 witness_vector(const Witness& w, const Evaluation& eval, const ChromaticEngine& engine = default_engine());

Witness apply_letter(const Witness& w, Letter letter);
Witness apply_word_graph(const Word& word, Witness start);
Vec2 predict_vector(const Word& word, const Vec2& start, const Evaluation& eval);

/// x / y; throws DomainError when y is zero.
Scalar ratio(const Vec2& v);
/// Ratio map of the block matrix; throws DomainError if the block is singular.
Mobius ratio_map(const Word& word, const Evaluation& eval);

/// Matrix of the apex operation re-witnessed on a new half-edge, in feasible mode.
Mat2 third_op_matrix(const Scalar& lambda);
/// Apex over e, witnessed on the edge from the apex to the first endpoint.
Witness apply_third_op(const Witness& w);
bool check_singular_third_op(const Scalar& lambda);

enum class Seed { K2, K3, K4 };

/// K_n with witness edge (0, 1).
Witness seed_witness(Seed seed);
int seed_order(Seed seed);
std::string to_string(Seed seed);
Seed parse_seed(std::string_view text);

}  // namespace chromaspec
