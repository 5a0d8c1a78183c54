#include "geonf/rational_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace geonf {

namespace {
const Rational kZero(0);
}

RatPoly::RatPoly(int bound) : bound_(std::max(bound, 0)), c_(index(0, bound_) + 1) {}

RatPoly RatPoly::x(int bound) {
  RatPoly p(std::max(bound, 1));
  p.at(1, 0) = 1;
  return p;
}

RatPoly RatPoly::y(int bound) {
  RatPoly p(std::max(bound, 1));
  p.at(0, 1) = 1;
  return p;
}

RatPoly RatPoly::constant(const Rational& c) {
  RatPoly p(0);
  p.at(0, 0) = c;
  return p;
}

RatPoly RatPoly::linear(const Rational& a, const Rational& b) {
  RatPoly p(1);
  p.at(1, 0) = a;
  p.at(0, 1) = b;
  return p;
}

int RatPoly::degree() const {
  for (int d = bound_; d >= 0; --d)
    for (int q = 0; q <= d; ++q)
      if (c_[index(d - q, q)] != 0) return d;
  return -1;
}

Rational& RatPoly::at(int p, int q) {
  if (p < 0 || q < 0) throw std::out_of_range("RatPoly: negative exponent");
  if (p + q > bound_) grow(p + q);
  return c_[index(p, q)];
}

const Rational& RatPoly::at(int p, int q) const {
  if (p < 0 || q < 0 || p + q > bound_) throw std::out_of_range("RatPoly: index beyond bound");
  return c_[index(p, q)];
}

Rational RatPoly::coeff(int p, int q) const {
  if (p < 0 || q < 0 || p + q > bound_) return kZero;
  return c_[index(p, q)];
}

void RatPoly::grow(int bound) {
  if (bound <= bound_) return;
  bound_ = bound;
  c_.resize(index(0, bound_) + 1);
}

RatPoly RatPoly::truncated(int n) const {
  RatPoly r(std::max(n, 0));
  if (n < 0) return r;
  for (int d = 0; d <= std::min(n, bound_); ++d)
    for (int q = 0; q <= d; ++q) r.c_[index(d - q, q)] = c_[index(d - q, q)];
  return r;
}

RatPoly RatPoly::homogeneous_part(int d) const {
  RatPoly r(d);
  if (d <= bound_)
    for (int q = 0; q <= d; ++q) r.c_[index(d - q, q)] = c_[index(d - q, q)];
  return r;
}

bool RatPoly::is_odd() const {
  for (int d = 0; d <= bound_; d += 2)
    for (int q = 0; q <= d; ++q)
      if (c_[index(d - q, q)] != 0) return false;
  return true;
}

Rational RatPoly::evaluate(const Rational& x, const Rational& y) const {
  // Horner in x over Horner-in-y inner sums
  Rational acc(0);
  for (int p = bound_; p >= 0; --p) {
    Rational inner(0);
    for (int q = bound_ - p; q >= 0; --q) inner = inner * y + c_[index(p, q)];
    acc = acc * x + inner;
  }
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  grow(o.bound_);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  grow(o.bound_);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

bool operator==(const RatPoly& a, const RatPoly& b) {
  const int n = std::max(a.bound_, b.bound_);
  for (int d = 0; d <= n; ++d)
    for (int q = 0; q <= d; ++q)
      if (a.coeff(d - q, q) != b.coeff(d - q, q)) return false;
  return true;
}

RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }

RatPoly mul(const RatPoly& a, const RatPoly& b, int trunc) {
  const int da = a.degree(), db = b.degree();
  if (da < 0 || db < 0) return RatPoly(trunc >= 0 ? trunc : 0);
  const int n = trunc >= 0 ? std::min(trunc, da + db) : da + db;
  RatPoly r(n);
  struct Term {
    int p, q;
    const Rational* c;
  };
  std::vector<Term> tb;
  for (int d = 0; d <= db; ++d)
    for (int q = 0; q <= d; ++q)
      if (b.at(d - q, q) != 0) tb.push_back({d - q, q, &b.at(d - q, q)});
  for (int d = 0; d <= std::min(da, n); ++d)
    for (int q = 0; q <= d; ++q) {
      const Rational& ca = a.at(d - q, q);
      if (ca == 0) continue;
      for (const auto& t : tb)
        if (d + t.p + t.q <= n) r.at(d - q + t.p, q + t.q) += ca * *t.c;
    }
  return r;
}

RatPoly pow(const RatPoly& a, int e, int trunc) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  RatPoly r = RatPoly::constant(1), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base, trunc);
    e >>= 1;
    if (e) base = mul(base, base, trunc);
  }
  return r;
}

RatPoly derivative_x(const RatPoly& a) {
  RatPoly r(std::max(a.bound() - 1, 0));
  for (int d = 1; d <= a.bound(); ++d)
    for (int q = 0; q < d; ++q) {
      const int p = d - q;
      if (a.at(p, q) != 0) r.at(p - 1, q) = a.at(p, q) * p;
    }
  return r;
}

RatPoly derivative_y(const RatPoly& a) {
  RatPoly r(std::max(a.bound() - 1, 0));
  for (int d = 1; d <= a.bound(); ++d)
    for (int q = 1; q <= d; ++q) {
      const int p = d - q;
      if (a.at(p, q) != 0) r.at(p, q - 1) = a.at(p, q) * q;
    }
  return r;
}

RatPoly compose(const RatPoly& P, const RatPoly& X, const RatPoly& Y, int trunc) {
  if (trunc >= 0 && (X.coeff(0, 0) != 0 || Y.coeff(0, 0) != 0))
    throw std::invalid_argument("compose: truncated substitution needs X(0) = Y(0) = 0");
  const int dp = P.degree();
  if (dp < 0) return RatPoly(0);
  std::vector<RatPoly> ypow{RatPoly::constant(1)};
  for (int q = 1; q <= dp; ++q) ypow.push_back(mul(ypow.back(), Y, trunc));
  auto column = [&](int p) {
    RatPoly s(0);
    for (int q = 0; p + q <= dp; ++q)
      if (P.at(p, q) != 0) s += P.at(p, q) * ypow[static_cast<std::size_t>(q)];
    return s;
  };
  RatPoly acc = column(dp);
  for (int p = dp - 1; p >= 0; --p) acc = mul(acc, X, trunc) + column(p);
  return trunc >= 0 ? acc.truncated(trunc) : acc;
}

int PlanarPoly::degree() const { return std::max(X.degree(), Y.degree()); }

PlanarPoly identity_map() { return {RatPoly::x(), RatPoly::y()}; }

PlanarPoly compose(const PlanarPoly& outer, const PlanarPoly& inner, int trunc) {
  return {compose(outer.X, inner.X, inner.Y, trunc), compose(outer.Y, inner.X, inner.Y, trunc)};
}

RatPoly jacobian_determinant(const PlanarPoly& m) {
  return mul(derivative_x(m.X), derivative_y(m.Y)) - mul(derivative_y(m.X), derivative_x(m.Y));
}

Rational dyadic_rational(const Real& x, unsigned bits) {
  Real s = round(x * two_pow(static_cast<long>(bits)));
  Int n;
  mpfr_get_z(n.backend().data(), s.backend().data(), MPFR_RNDN);
  return Rational(n, Int(1) << bits);
}

}  // namespace geonf
