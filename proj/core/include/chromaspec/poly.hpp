#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chromaspec/scalar.hpp"

namespace chromaspec {

/// Polynomial with arbitrary-precision integer coefficients; coeffs()[k]
/// multiplies x^k. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Integer> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Integer& c);
  static Poly monomial(unsigned degree, const Integer& c = 1);
  /// x - c
  static Poly linear_root(const Integer& c);
  /// Falling factorial (x)_m = x(x-1)...(x-m+1).
  static Poly falling_factorial(unsigned m);

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  [[nodiscard]] Integer leading() const { return is_zero() ? Integer(0) : coeffs_.back(); }

  /// Horner evaluation.
  [[nodiscard]] Scalar eval(const Scalar& at) const;
  [[nodiscard]] Integer eval(const Integer& at) const;
  /// p(x - shift)
  [[nodiscard]] Poly shifted(const Integer& shift) const;
  [[nodiscard]] Poly pow(unsigned exponent) const;
  [[nodiscard]] std::string to_string() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Integer& rhs);
  Poly operator-() const;

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Integer& rhs) { return lhs *= rhs; }
  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

Scalar poly_eval(const Poly& p, const Scalar& at);
/// s(s-1)...(s-m+1); the empty product is 1.
Scalar falling_factorial(const Scalar& s, unsigned m);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace chromaspec
