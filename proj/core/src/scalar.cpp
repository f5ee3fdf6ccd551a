#include "chromaspec/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "chromaspec/errors.hpp"

namespace chromaspec {

namespace {

constexpr std::int64_t kMaxRadicand = 1'000'000'000'000;

Integer parse_digits(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) {
    throw DomainError("scalar: expected digits at offset " + std::to_string(start) + " in '" +
                      std::string(text) + "'");
  }
  return Integer(std::string(text.substr(start, pos - start)));
}

bool consume(std::string_view text, std::size_t& pos, std::string_view token) {
  if (text.substr(pos, token.size()) == token) {
    pos += token.size();
    return true;
  }
  return false;
}

Integer parse_sqrt_argument(std::string_view text, std::size_t& pos) {
  Integer d = parse_digits(text, pos);
  if (!consume(text, pos, ")")) throw DomainError("scalar: missing ')' in '" + std::string(text) + "'");
  return d;
}

}  // namespace

Scalar::Scalar(const Rational& value) : a_(value) { a_.canonicalize(); }

Scalar Scalar::quadratic(const Rational& a, const Rational& b, const Integer& d) {
  if (sgn(d) < 0) throw DomainError("scalar: negative radicand " + d.get_str());
  if (d > kMaxRadicand) throw DomainError("scalar: radicand too large " + d.get_str());
  Scalar out;
  out.a_ = a;
  out.b_ = b;
  std::int64_t rad = d.get_si();
  for (std::int64_t p = 2; p * p <= rad; ++p) {
    while (rad % (p * p) == 0) {
      rad /= p * p;
      out.b_ *= p;
    }
  }
  out.d_ = rad;
  out.canonicalize();
  return out;
}

void Scalar::canonicalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ == 1) {
    a_ += b_;
    d_ = 0;
  }
  if (d_ == 0 || sgn(b_) == 0) {
    b_ = 0;
    d_ = 0;
  }
}

std::int64_t Scalar::common_radicand(const Scalar& rhs) const {
  if (d_ == 0) return rhs.d_;
  if (rhs.d_ == 0 || rhs.d_ == d_) return d_;
  throw DomainError("scalar: incompatible radicands sqrt(" + std::to_string(d_) + ") and sqrt(" +
                    std::to_string(rhs.d_) + ")");
}

bool Scalar::is_integer() const { return d_ == 0 && a_.get_den() == 1; }

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger magnitude wins; a^2 == b^2 d is impossible for square-free d.
  const Rational a2 = a_ * a_;
  const Rational b2d = b_ * b_ * d_;
  return a2 > b2d ? sa : sb;
}

Scalar Scalar::conjugate() const {
  Scalar out = *this;
  out.b_ = -out.b_;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("scalar: division by zero");
  if (d_ == 0) return Scalar(Rational(1) / a_);
  const Rational norm = a_ * a_ - b_ * b_ * d_;
  Scalar out;
  out.a_ = a_ / norm;
  out.b_ = -b_ / norm;
  out.d_ = d_;
  out.canonicalize();
  return out;
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = 1;
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Integer Scalar::ceil() const {
  if (d_ == 0) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
    return q;
  }
  Integer k(std::ceil(to_double()));
  while (Scalar(Integer(k - 1)) >= *this) k -= 1;
  while (Scalar(k) < *this) k += 1;
  return k;
}

double Scalar::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string Scalar::to_string() const {
  if (d_ == 0) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) {
    out = a_.get_str();
    if (sgn(b_) > 0) out += '+';
  }
  out += b_.get_str();
  out += "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  if (text.empty()) throw DomainError("scalar: empty text");
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      throw DomainError("scalar: whitespace not allowed in '" + std::string(text) + "'");
    }
  }
  Scalar acc;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw DomainError("scalar: expected '+' or '-' at offset " + std::to_string(pos) + " in '" +
                        std::string(text) + "'");
    }
    first = false;
    Scalar term;
    if (consume(text, pos, "sqrt(")) {
      const Integer d = parse_sqrt_argument(text, pos);
      Rational coeff = 1;
      if (consume(text, pos, "/")) {
        const Integer den = parse_digits(text, pos);
        if (sgn(den) == 0) throw DomainError("scalar: zero denominator in '" + std::string(text) + "'");
        coeff = Rational(1, den);
      }
      term = quadratic(0, coeff, d);
    } else {
      const Integer num = parse_digits(text, pos);
      Integer den = 1;
      if (consume(text, pos, "/")) {
        den = parse_digits(text, pos);
        if (sgn(den) == 0) throw DomainError("scalar: zero denominator in '" + std::string(text) + "'");
      }
      Rational r(num, den);
      r.canonicalize();
      if (consume(text, pos, "*sqrt(")) {
        term = quadratic(0, r, parse_sqrt_argument(text, pos));
      } else {
        term = Scalar(r);
      }
    }
    if (sign < 0) term = -term;
    acc += term;
  }
  return acc;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  const std::int64_t d = common_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  d_ = d;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  const std::int64_t d = common_radicand(rhs);
  if (d == 0) {
    a_ *= rhs.a_;
  } else {
    const Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d;
    const Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = a;
    b_ = b;
    d_ = d;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  common_radicand(rhs);
  return *this *= rhs.inverse();
}

std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  lhs.common_radicand(rhs);
  const int s = (lhs - rhs).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int scalar_cmp(const Scalar& lhs, const Scalar& rhs) {
  const auto order = lhs <=> rhs;
  if (order < 0) return -1;
  if (order > 0) return 1;
  return 0;
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) { return os << value.to_string(); }

}  // namespace chromaspec
