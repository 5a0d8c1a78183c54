#include "geonf/real.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace geonf {

namespace {

unsigned digits10_for(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

// Scratch register for the fused kernels; grows with the working precision.
struct Scratch {
  mpfr_t t;
  Scratch() { mpfr_init2(t, 64); }
  ~Scratch() { mpfr_clear(t); }
  mpfr_ptr at(mpfr_prec_t p) {
    if (mpfr_get_prec(t) != p) mpfr_set_prec(t, p);
    return t;
  }
};

thread_local Scratch scratch;

}  // namespace

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits10_(Real::default_precision()) {
  if (bits < 64) throw std::invalid_argument("precision must be at least 64 bits");
  Real::default_precision(digits10_for(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

unsigned working_bits() {
  Real probe;
  return static_cast<unsigned>(mpfr_get_prec(probe.backend().data()));
}

void round_to_working(Real& x) { x.precision(Real::default_precision()); }

Real at_working(const Real& x) {
  Real r;
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

Complex at_working(const Complex& a) { return {at_working(a.re), at_working(a.im)}; }

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real two_pow(long e) {
  Real r(1);
  mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
  return r;
}

Real factorial(unsigned long n) {
  Real r;
  mpfr_fac_ui(r.backend().data(), n, MPFR_RNDN);
  return r;
}

std::string to_decimal(const Real& x) {
  if (mpfr_zero_p(x.backend().data())) return "0";
  const auto bits = mpfr_get_prec(x.backend().data());
  const auto digits = static_cast<std::streamsize>(std::ceil(bits * 0.30102999566398120)) + 2;
  return x.str(digits, std::ios_base::scientific);
}

Real parse_real(const std::string& s) {
  Real r;
  if (mpfr_set_str(r.backend().data(), s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  return r;
}

bool Complex::is_zero() const {
  return mpfr_zero_p(re.backend().data()) && mpfr_zero_p(im.backend().data());
}

Real Complex::abs() const {
  Real r;
  mpfr_hypot(r.backend().data(), re.backend().data(), im.backend().data(), MPFR_RNDN);
  return r;
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}

Complex& Complex::operator*=(const Real& s) {
  re *= s;
  im *= s;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  const Real n = o.norm();
  Real r = (re * o.re + im * o.im) / n;
  Real i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  Complex r;
  fma_acc(r, a, b);
  return r;
}

Complex operator*(const Real& s, Complex a) { return a *= s; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }

void fma_acc(Complex& acc, const Complex& a, const Complex& b) {
  auto* ar = a.re.backend().data();
  auto* ai = a.im.backend().data();
  auto* br = b.re.backend().data();
  auto* bi = b.im.backend().data();
  auto* cr = acc.re.backend().data();
  auto* ci = acc.im.backend().data();
  mpfr_ptr t = scratch.at(mpfr_get_prec(cr));
  if (mpfr_zero_p(ai) && mpfr_zero_p(bi)) {
    mpfr_mul(t, ar, br, MPFR_RNDN);
    mpfr_add(cr, cr, t, MPFR_RNDN);
    return;
  }
  mpfr_fmms(t, ar, br, ai, bi, MPFR_RNDN);
  mpfr_add(cr, cr, t, MPFR_RNDN);
  mpfr_fmma(t, ar, bi, ai, br, MPFR_RNDN);
  mpfr_add(ci, ci, t, MPFR_RNDN);
}

Complex expi2pi(const Real& x) {
  Real angle = 2 * pi() * x;
  Complex r;
  mpfr_sin_cos(r.im.backend().data(), r.re.backend().data(), angle.backend().data(), MPFR_RNDN);
  return r;
}

Complex complex_exp(const Complex& a) {
  Real m = exp(a.re);
  Complex r;
  mpfr_sin_cos(r.im.backend().data(), r.re.backend().data(), a.im.backend().data(), MPFR_RNDN);
  return r *= m;
}

Complex complex_sqrt(const Complex& a) {
  // principal branch
  if (a.is_zero()) return {};
  const Real m = a.abs();
  Real re = sqrt((m + a.re) / 2);
  Real im = sqrt((m - a.re) / 2);
  if (a.im < 0) im = -im;
  return {re, im};
}

}  // namespace geonf
