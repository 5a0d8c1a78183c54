#pragma once

#include "geonf/real.hpp"

#include <cstddef>
#include <vector>

namespace geonf {

// Exact polynomial Σ c_pq x^p y^q over ℚ, dense triangular storage up to `bound` total degree.
class RatPoly {
 public:
  RatPoly() : RatPoly(0) {}
  explicit RatPoly(int bound);
  static RatPoly x(int bound = 1);
  static RatPoly y(int bound = 1);
  static RatPoly constant(const Rational& c);
  static RatPoly linear(const Rational& a, const Rational& b);  // a x + b y

  int bound() const { return bound_; }
  int degree() const;  // −1 for the zero polynomial
  bool is_zero() const { return degree() < 0; }
  Rational& at(int p, int q);
  const Rational& at(int p, int q) const;
  Rational coeff(int p, int q) const;  // zero beyond the bound

  RatPoly truncated(int n) const;  // degrees ≤ n
  RatPoly homogeneous_part(int d) const;
  bool is_odd() const;  // only odd total degrees
  Rational evaluate(const Rational& x, const Rational& y) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rational& s);
  friend bool operator==(const RatPoly& a, const RatPoly& b);

 private:
  static std::size_t index(int p, int q) {
    const auto d = static_cast<std::size_t>(p + q);
    return d * (d + 1) / 2 + static_cast<std::size_t>(q);
  }
  void grow(int bound);

  int bound_;
  std::vector<Rational> c_;
};

RatPoly operator+(RatPoly a, const RatPoly& b);
RatPoly operator-(RatPoly a, const RatPoly& b);
RatPoly operator*(const Rational& s, RatPoly a);
// product truncated at total degree `trunc` (no truncation when trunc < 0)
RatPoly mul(const RatPoly& a, const RatPoly& b, int trunc = -1);
RatPoly pow(const RatPoly& a, int e, int trunc = -1);
RatPoly derivative_x(const RatPoly& a);
RatPoly derivative_y(const RatPoly& a);
// P(X, Y), truncated at `trunc` when trunc ≥ 0 (X, Y must then vanish at the origin)
RatPoly compose(const RatPoly& P, const RatPoly& X, const RatPoly& Y, int trunc = -1);

// (x, y) ↦ (X(x,y), Y(x,y))
struct PlanarPoly {
  RatPoly X, Y;

  int degree() const;
  PlanarPoly truncated(int n) const { return {X.truncated(n), Y.truncated(n)}; }
  PlanarPoly homogeneous_part(int d) const { return {X.homogeneous_part(d), Y.homogeneous_part(d)}; }
  bool is_odd() const { return X.is_odd() && Y.is_odd(); }
  friend bool operator==(const PlanarPoly& a, const PlanarPoly& b) { return a.X == b.X && a.Y == b.Y; }
};

PlanarPoly identity_map();
// outer∘inner
PlanarPoly compose(const PlanarPoly& outer, const PlanarPoly& inner, int trunc = -1);
// X_x Y_y − X_y Y_x, exactly
RatPoly jacobian_determinant(const PlanarPoly& m);

// Nearest fraction with denominator 2^bits.
Rational dyadic_rational(const Real& x, unsigned bits);

}  // namespace geonf
