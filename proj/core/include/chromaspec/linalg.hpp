#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "chromaspec/scalar.hpp"

namespace chromaspec {

struct Vec2 {
  Scalar x;
  Scalar y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  Vec2& operator*=(const Scalar& s) {
    x *= s;
    y *= s;
    return *this;
  }
  [[nodiscard]] std::string to_string() const;
};

/// 2x2 matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
  Scalar a = 1;
  Scalar b = 0;
  Scalar c = 0;
  Scalar d = 1;

  static Mat2 identity() { return {}; }
  static Mat2 diagonal(const Scalar& p, const Scalar& q) { return {p, 0, 0, q}; }

  [[nodiscard]] Scalar det() const { return a * d - b * c; }
  [[nodiscard]] Mat2 inverse() const;
  [[nodiscard]] Mat2 pow(unsigned exponent) const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
Vec2 operator*(const Mat2& m, const Vec2& v);

std::ostream& operator<<(std::ostream& os, const Vec2& v);
std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace chromaspec
