#pragma once

#include "geonf/real.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace geonf {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Truncated series Σ_{n ≤ order} c_n t^n.  `real` marks series known to have real coefficients.
class UniSeries {
 public:
  UniSeries() = default;
  explicit UniSeries(int order, bool real = false);

  static UniSeries identity(int order);
  static UniSeries monomial(int order, int n, const Complex& c);

  int order() const { return order_; }
  bool is_real() const { return real_; }
  void set_real(bool r) { real_ = r; }

  Complex& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
  const Complex& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  // zero outside 0..order
  Complex coeff(int n) const;

  UniSeries truncated(int order) const;
  UniSeries conj() const;  // coefficientwise conjugate
  // zero imaginary parts; returns the largest discarded |Im c_n|
  Real make_real();
  Real max_abs() const;
  Real max_abs_imag() const;
  bool is_even(const Real& tol) const;
  bool is_odd(const Real& tol) const;

  UniSeries& operator+=(const UniSeries& o);
  UniSeries& operator-=(const UniSeries& o);
  UniSeries& operator*=(const Complex& s);

 private:
  int order_ = 0;
  bool real_ = false;
  std::vector<Complex> c_;
};

UniSeries operator+(UniSeries a, const UniSeries& b);
UniSeries operator-(UniSeries a, const UniSeries& b);
UniSeries operator*(const Complex& s, UniSeries a);
UniSeries mul(const UniSeries& a, const UniSeries& b);

// g∘h, requires h(0) = 0; truncated at g.order() (which must not exceed h.order()).
UniSeries compose(const UniSeries& g, const UniSeries& h);
// compositional inverse of g with g(0) = 0, g'(0) ≠ 0 (Lagrange inversion).
UniSeries invert(const UniSeries& g);
UniSeries reciprocal(const UniSeries& a);  // a(0) ≠ 0
UniSeries derivative(const UniSeries& a);
// f(t) ↦ f(s·t)
UniSeries scale_argument(const UniSeries& a, const Complex& s);

UniSeries sqrt1p(const UniSeries& u);  // √(1+u), u(0) = 0
UniSeries exp(const UniSeries& u);     // u(0) = 0
UniSeries log(const UniSeries& v);     // v(0) = 1

// Taylor coefficients of the analytic functions above, at the origin.
UniSeries sqrt1p_taylor(int order);
UniSeries exp_taylor(int order);
UniSeries log1p_taylor(int order);

// Dense triangular truncated series Σ_{j+k ≤ order} c_jk z^j w^k (full grid).
class BiSeries {
 public:
  BiSeries() = default;
  explicit BiSeries(int order);

  static BiSeries monomial(int order, int j, int k, const Complex& c);
  static BiSeries one(int order) { return monomial(order, 0, 0, Complex(1)); }
  static BiSeries z(int order) { return monomial(order, 1, 0, Complex(1)); }
  static BiSeries w(int order) { return monomial(order, 0, 1, Complex(1)); }
  static BiSeries zw(int order) { return monomial(order, 1, 1, Complex(1)); }

  int order() const { return order_; }
  Complex& at(int j, int k) { return c_[index(j, k)]; }
  const Complex& at(int j, int k) const { return c_[index(j, k)]; }
  Complex coeff(int j, int k) const;

  // coefficient storage in degree-major order: (d, k) ↦ d(d+1)/2 + k
  static std::size_t index(int j, int k) {
    const auto d = static_cast<std::size_t>(j + k);
    return d * (d + 1) / 2 + static_cast<std::size_t>(k);
  }
  static std::size_t size_for(int order) { return index(0, order) + 1; }
  const std::vector<Complex>& data() const { return c_; }
  std::vector<Complex>& data() { return c_; }

  BiSeries truncated(int order) const;
  BiSeries homogeneous_part(int d) const;
  int min_degree() const;  // order+1 for the zero series
  Real max_abs() const;
  Real max_abs_degree(int d) const;
  bool is_zero() const { return min_degree() > order_; }

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  BiSeries& operator*=(const Complex& s);

 private:
  int order_ = 0;
  std::vector<Complex> c_;
};

BiSeries operator+(BiSeries a, const BiSeries& b);
BiSeries operator-(BiSeries a, const BiSeries& b);
BiSeries operator*(const Complex& s, BiSeries a);
BiSeries mul(const BiSeries& a, const BiSeries& b);

// tilde f(z,w) = Σ conj(f_kl) z^l w^k
BiSeries tilde(const BiSeries& f);
// f·tilde(f)
BiSeries square_modulus(const BiSeries& f);
// max |c_jk − conj(c_kj)|
Real hermitian_defect(const BiSeries& f);
// f(z,w) ↦ ½(f + tilde f)
BiSeries hermitian_part(const BiSeries& f);

// f(g1, g2) with g1, g2 free of constant terms, Horner in g1 over precomputed powers of g2.
BiSeries compose(const BiSeries& f, const BiSeries& g1, const BiSeries& g2);
// L(F, tilde F)
BiSeries hat_compose(const BiSeries& L, const BiSeries& F);
// inverse of the pair (Φ, tilde Φ), first component; Φ = z + O(2)
BiSeries invert_pair(const BiSeries& phi);

// L(z,z)
UniSeries diagonal(const BiSeries& L);
// g∘L, L(0,0) = 0
BiSeries compose(const UniSeries& g, const BiSeries& L);
// L(c1(u), c2(u))
UniSeries compose(const BiSeries& L, const UniSeries& c1, const UniSeries& c2);
// g(zw)
BiSeries of_zw(const UniSeries& g, int order);
// g(z) as a series in (z,w)
BiSeries of_z(const UniSeries& g, int order);

BiSeries reciprocal(const BiSeries& a);  // a(0,0) ≠ 0
BiSeries sqrt1p(const BiSeries& u);      // u(0,0) = 0
BiSeries exp(const BiSeries& u);         // u(0,0) = 0
BiSeries log(const BiSeries& v);         // v(0,0) = 1
BiSeries derivative_z(const BiSeries& a);
BiSeries derivative_w(const BiSeries& a);

// Linear change of chart: x = a z + b w, y = c z + d w applied to f(x,y).
BiSeries linear_substitute(const BiSeries& f, const Complex& a, const Complex& b, const Complex& c,
                           const Complex& d);
// f(x,y) ↦ f((z+w)/2, (z−w)/(2i))
BiSeries xy_to_zw(const BiSeries& f);
// f(z,w) ↦ f(x+iy, x−iy)
BiSeries zw_to_xy(const BiSeries& f);

}  // namespace geonf
