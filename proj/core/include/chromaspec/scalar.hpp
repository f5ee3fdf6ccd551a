#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chromaspec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact element a + b*sqrt(d) of Q or of a real quadratic field Q(sqrt(d)).
///
/// Scalars are always canonical: fractions are reduced, d is square-free and
/// greater than one, and d == 0 exactly when b == 0. Equality is therefore
/// structural. Rational scalars combine with any radicand; combining two
/// different nonzero radicands throws DomainError.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(unsigned value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(unsigned long value) : a_(value) {}  // NOLINT
  Scalar(const Integer& value) : a_(value) {}  // NOLINT
  Scalar(const Rational& value);               // NOLINT

  /// Builds a + b*sqrt(d), extracting square factors from d.
  static Scalar quadratic(const Rational& a, const Rational& b, const Integer& d);
  static Scalar sqrt_of(const Integer& d) { return quadratic(0, 1, d); }

  /// Parses `a/b` or `a/b+c/e*sqrt(d)`; see to_string for the output form.
  static Scalar parse(std::string_view text);

  [[nodiscard]] const Rational& rational_part() const noexcept { return a_; }
  [[nodiscard]] const Rational& radical_coefficient() const noexcept { return b_; }
  [[nodiscard]] std::int64_t radicand() const noexcept { return d_; }
  [[nodiscard]] bool is_rational() const noexcept { return d_ == 0; }
  [[nodiscard]] bool is_zero() const noexcept { return d_ == 0 && sgn(a_) == 0; }
  [[nodiscard]] bool is_integer() const;

  /// Exact sign (-1, 0, 1), decided without floating point.
  [[nodiscard]] int sign() const;

  [[nodiscard]] Scalar inverse() const;
  [[nodiscard]] Scalar pow(unsigned exponent) const;
  [[nodiscard]] Scalar abs() const { return sign() < 0 ? -*this : *this; }
  /// Conjugate a - b*sqrt(d).
  [[nodiscard]] Scalar conjugate() const;

  /// Smallest integer >= value.
  [[nodiscard]] Integer ceil() const;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.d_ == rhs.d_ && lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }
  /// Real-number order. Throws DomainError on incompatible radicands.
  friend std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

 private:
  void canonicalize();
  std::int64_t common_radicand(const Scalar& rhs) const;

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

/// Three-way comparison returning -1, 0 or 1.
int scalar_cmp(const Scalar& lhs, const Scalar& rhs);

std::ostream& operator<<(std::ostream& os, const Scalar& value);

}  // namespace chromaspec
