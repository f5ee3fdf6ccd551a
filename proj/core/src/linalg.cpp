#include "chromaspec/linalg.hpp"

#include <ostream>

#include "chromaspec/errors.hpp"

namespace chromaspec {

std::string Vec2::to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }

Mat2 Mat2::inverse() const {
  const Scalar det_value = det();
  if (det_value.is_zero()) throw DomainError("matrix is singular: " + to_string());
  const Scalar inv = det_value.inverse();
  return {d * inv, -b * inv, -c * inv, a * inv};
}

Mat2 Mat2::pow(unsigned exponent) const {
  Mat2 result;
  Mat2 base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

std::string Mat2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() +
         "]]";
}

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
  return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d, lhs.c * rhs.a + lhs.d * rhs.c,
          lhs.c * rhs.b + lhs.d * rhs.d};
}

Vec2 operator*(const Mat2& m, const Vec2& v) { return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y}; }

std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.to_string(); }

}  // namespace chromaspec
