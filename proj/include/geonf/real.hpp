#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace geonf {

using Real = boost::multiprecision::mpfr_float;
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline constexpr unsigned kDefaultBits = 256;

// Every Real created while a scope is alive gets at least `bits` binary digits.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits10_;
};

// Binary precision of a freshly constructed Real.
unsigned working_bits();

// Round `x` in place to the current working precision.
void round_to_working(Real& x);
// copy of `x` rounded to the current working precision
Real at_working(const Real& x);

Real pi();
Real two_pow(long e);
Real factorial(unsigned long n);

// Deterministic decimal rendering with enough digits to round-trip the value.
std::string to_decimal(const Real& x);
Real parse_real(const std::string& s);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(const Real& r) : re(r), im(0) {}  // NOLINT: real embedding
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r, double i = 0.0) : re(r), im(i) {}  // NOLINT

  bool is_zero() const;
  Complex conj() const { return {re, -im}; }
  Real norm() const { return re * re + im * im; }
  Real abs() const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator*=(const Real& s);
  Complex& operator/=(const Complex& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Real& s, Complex a);
Complex operator/(Complex a, const Complex& b);

inline Complex conj(const Complex& a) { return a.conj(); }
inline Real abs(const Complex& a) { return a.abs(); }

// acc += a*b with one rounding per component product pair.
void fma_acc(Complex& acc, const Complex& a, const Complex& b);

// e^{2πi x}
Complex expi2pi(const Real& x);
Complex complex_exp(const Complex& a);
Complex complex_sqrt(const Complex& a);
Complex at_working(const Complex& a);

}  // namespace geonf
