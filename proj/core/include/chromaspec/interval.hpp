#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "chromaspec/linalg.hpp"
#include "chromaspec/scalar.hpp"

namespace chromaspec {

/// One endpoint of an interval. Infinite endpoints are never closed.
struct Bound {
  enum class Kind { NegInf, Finite, PosInf };

  Kind kind = Kind::NegInf;
  Scalar value;
  bool closed = false;

  static Bound neg_inf() { return {Kind::NegInf, {}, false}; }
  static Bound pos_inf() { return {Kind::PosInf, {}, false}; }
  static Bound finite(Scalar v, bool closed) { return {Kind::Finite, std::move(v), closed}; }

  [[nodiscard]] bool is_finite() const noexcept { return kind == Kind::Finite; }
  friend bool operator==(const Bound&, const Bound&) = default;
};

/// Nonempty real interval with open, closed or infinite endpoints.
class Interval {
 public:
  /// Throws DomainError if the endpoints describe an empty set.
  Interval(Bound lo, Bound hi);

  static Interval open(const Scalar& lo, const Scalar& hi);
  static Interval closed(const Scalar& lo, const Scalar& hi);
  /// (lo, hi]
  static Interval open_closed(const Scalar& lo, const Scalar& hi);
  /// [lo, hi)
  static Interval closed_open(const Scalar& lo, const Scalar& hi);
  /// (-inf, hi] or (-inf, hi)
  static Interval below(const Scalar& hi, bool closed);
  /// [lo, +inf) or (lo, +inf)
  static Interval above(const Scalar& lo, bool closed);
  static Interval real_line();

  [[nodiscard]] const Bound& lo() const noexcept { return lo_; }
  [[nodiscard]] const Bound& hi() const noexcept { return hi_; }

  [[nodiscard]] bool contains(const Scalar& x) const;
  [[nodiscard]] bool closure_contains(const Scalar& x) const;
  [[nodiscard]] bool subset_of(const Interval& other) const;
  [[nodiscard]] std::optional<Interval> intersect(const Interval& other) const;
  [[nodiscard]] bool disjoint_from(const Interval& other) const { return !intersect(other).has_value(); }

  /// Text form such as `(0,1/2]` or `(-inf,0]`.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Bound lo_;
  Bound hi_;
};

/// Fractional linear map r -> (alpha*r + beta) / (gamma*r + delta).
struct Mobius {
  Scalar alpha = 1;
  Scalar beta = 0;
  Scalar gamma = 0;
  Scalar delta = 1;

  /// The ratio map x/y induced by (x, y) -> m * (x, y).
  static Mobius from_matrix(const Mat2& m) { return {m.a, m.b, m.c, m.d}; }

  [[nodiscard]] Scalar det() const { return alpha * delta - beta * gamma; }
  [[nodiscard]] std::optional<Scalar> pole() const;
  /// Throws DomainError at the pole.
  [[nodiscard]] Scalar operator()(const Scalar& r) const;
  /// True when the coefficient vectors are proportional (same map).
  [[nodiscard]] bool equivalent(const Mobius& other) const;
  [[nodiscard]] std::string to_string() const;
};

/// Exact image of an interval under a Mobius map. The pole must lie outside
/// the closure of the interval, otherwise DomainError is thrown.
Interval mobius_image(const Mobius& f, const Interval& interval);

std::ostream& operator<<(std::ostream& os, const Interval& interval);

}  // namespace chromaspec
