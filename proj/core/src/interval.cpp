#include "chromaspec/interval.hpp"

#include <ostream>

#include "chromaspec/errors.hpp"

namespace chromaspec {

namespace {

// Orders lower bounds by how much they admit: -inf < [v < (v < [w for v < w.
int cmp_lower(const Bound& x, const Bound& y) {
  if (x.kind == Bound::Kind::NegInf || y.kind == Bound::Kind::NegInf) {
    return (x.kind == Bound::Kind::NegInf ? 0 : 1) - (y.kind == Bound::Kind::NegInf ? 0 : 1);
  }
  const int c = scalar_cmp(x.value, y.value);
  if (c != 0) return c;
  if (x.closed == y.closed) return 0;
  return x.closed ? -1 : 1;
}

// Orders upper bounds: v) < v] < w) for v < w, and +inf is largest.
int cmp_upper(const Bound& x, const Bound& y) {
  if (x.kind == Bound::Kind::PosInf || y.kind == Bound::Kind::PosInf) {
    return (x.kind == Bound::Kind::PosInf ? 1 : 0) - (y.kind == Bound::Kind::PosInf ? 1 : 0);
  }
  const int c = scalar_cmp(x.value, y.value);
  if (c != 0) return c;
  if (x.closed == y.closed) return 0;
  return x.closed ? 1 : -1;
}

bool nonempty(const Bound& lo, const Bound& hi) {
  if (!lo.is_finite() || !hi.is_finite()) return true;
  const int c = scalar_cmp(lo.value, hi.value);
  return c < 0 || (c == 0 && lo.closed && hi.closed);
}

}  // namespace

Interval::Interval(Bound lo, Bound hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.kind == Bound::Kind::PosInf || hi_.kind == Bound::Kind::NegInf) {
    throw DomainError("interval: infinite endpoint on the wrong side");
  }
  if (!lo_.is_finite()) lo_.closed = false;
  if (!hi_.is_finite()) hi_.closed = false;
  if (!nonempty(lo_, hi_)) throw DomainError("interval: empty " + to_string());
}

Interval Interval::open(const Scalar& lo, const Scalar& hi) {
  return {Bound::finite(lo, false), Bound::finite(hi, false)};
}
Interval Interval::closed(const Scalar& lo, const Scalar& hi) {
  return {Bound::finite(lo, true), Bound::finite(hi, true)};
}
Interval Interval::open_closed(const Scalar& lo, const Scalar& hi) {
  return {Bound::finite(lo, false), Bound::finite(hi, true)};
}
Interval Interval::closed_open(const Scalar& lo, const Scalar& hi) {
  return {Bound::finite(lo, true), Bound::finite(hi, false)};
}
Interval Interval::below(const Scalar& hi, bool closed) { return {Bound::neg_inf(), Bound::finite(hi, closed)}; }
Interval Interval::above(const Scalar& lo, bool closed) { return {Bound::finite(lo, closed), Bound::pos_inf()}; }
Interval Interval::real_line() { return {Bound::neg_inf(), Bound::pos_inf()}; }

bool Interval::contains(const Scalar& x) const {
  if (lo_.is_finite()) {
    const int c = scalar_cmp(x, lo_.value);
    if (c < 0 || (c == 0 && !lo_.closed)) return false;
  }
  if (hi_.is_finite()) {
    const int c = scalar_cmp(x, hi_.value);
    if (c > 0 || (c == 0 && !hi_.closed)) return false;
  }
  return true;
}

bool Interval::closure_contains(const Scalar& x) const {
  if (lo_.is_finite() && x < lo_.value) return false;
  if (hi_.is_finite() && x > hi_.value) return false;
  return true;
}

bool Interval::subset_of(const Interval& other) const {
  return cmp_lower(other.lo_, lo_) <= 0 && cmp_upper(hi_, other.hi_) <= 0;
}

std::optional<Interval> Interval::intersect(const Interval& other) const {
  const Bound& lo = cmp_lower(lo_, other.lo_) >= 0 ? lo_ : other.lo_;
  const Bound& hi = cmp_upper(hi_, other.hi_) <= 0 ? hi_ : other.hi_;
  if (!nonempty(lo, hi)) return std::nullopt;
  return Interval(lo, hi);
}

std::string Interval::to_string() const {
  std::string out;
  out += lo_.closed ? '[' : '(';
  out += lo_.is_finite() ? lo_.value.to_string() : "-inf";
  out += ',';
  out += hi_.is_finite() ? hi_.value.to_string() : "+inf";
  out += hi_.closed ? ']' : ')';
  return out;
}

std::optional<Scalar> Mobius::pole() const {
  if (gamma.is_zero()) return std::nullopt;
  return -delta / gamma;
}

Scalar Mobius::operator()(const Scalar& r) const {
  const Scalar den = gamma * r + delta;
  if (den.is_zero()) throw DomainError("mobius: evaluation at the pole " + r.to_string());
  return (alpha * r + beta) / den;
}

bool Mobius::equivalent(const Mobius& other) const {
  const Scalar* u[4] = {&alpha, &beta, &gamma, &delta};
  const Scalar* v[4] = {&other.alpha, &other.beta, &other.gamma, &other.delta};
  bool u_zero = true;
  bool v_zero = true;
  for (int i = 0; i < 4; ++i) {
    u_zero = u_zero && u[i]->is_zero();
    v_zero = v_zero && v[i]->is_zero();
    for (int j = i + 1; j < 4; ++j) {
      if (!(*u[i] * *v[j] - *u[j] * *v[i]).is_zero()) return false;
    }
  }
  return !u_zero && !v_zero;
}

namespace {

// c*r + k with unit and zero coefficients elided.
std::string linear_text(const Scalar& c, const Scalar& k) {
  const auto factor = [](const Scalar& x) { return x.is_rational() ? x.to_string() : "(" + x.to_string() + ")"; };
  std::string out;
  if (c == Scalar(1)) out = "r";
  else if (c == Scalar(-1)) out = "-r";
  else if (!c.is_zero()) out = factor(c) + "*r";
  if (k.is_zero()) return out.empty() ? "0" : out;
  if (out.empty()) return factor(k);
  if (k.is_rational() && k.sign() < 0) return out + k.to_string();
  return out + "+" + factor(k);
}

}  // namespace

std::string Mobius::to_string() const {
  return "r -> (" + linear_text(alpha, beta) + ")/(" + linear_text(gamma, delta) + ")";
}

Interval mobius_image(const Mobius& f, const Interval& interval) {
  const int orientation = f.det().sign();
  if (orientation == 0) throw DomainError("mobius: degenerate map " + f.to_string());
  if (const auto p = f.pole(); p && interval.closure_contains(*p)) {
    throw DomainError("mobius: pole " + p->to_string() + " lies in the closure of " + interval.to_string());
  }
  const auto map_bound = [&f](const Bound& b) -> Bound {
    if (b.is_finite()) return Bound::finite(f(b.value), b.closed);
    if (!f.gamma.is_zero()) return Bound::finite(f.alpha / f.gamma, false);
    const int direction = (f.alpha / f.delta).sign() * (b.kind == Bound::Kind::PosInf ? 1 : -1);
    return direction > 0 ? Bound::pos_inf() : Bound::neg_inf();
  };
  Bound lo = map_bound(interval.lo());
  Bound hi = map_bound(interval.hi());
  if (orientation < 0) std::swap(lo, hi);
  return {std::move(lo), std::move(hi)};
}

std::ostream& operator<<(std::ostream& os, const Interval& interval) { return os << interval.to_string(); }

}  // namespace chromaspec
