#include "geonf/series.hpp"

#include <algorithm>
#include <string>

namespace geonf {

namespace {

void require_same_order(int a, int b, const char* what) {
  if (a != b)
    throw SeriesError(std::string(what) + ": order mismatch (" + std::to_string(a) + " vs " +
                      std::to_string(b) + ")");
}

// Constants that must vanish (or equal one) are compared against this rather than exactly,
// since they usually come out of a computation.
Real leading_tolerance() { return two_pow(-static_cast<long>(working_bits() / 2)); }

struct Entry {
  int j, k;
  const Complex* c;
};

std::vector<Entry> nonzeros(const BiSeries& a) {
  std::vector<Entry> out;
  for (int d = 0; d <= a.order(); ++d)
    for (int k = 0; k <= d; ++k)
      if (!a.at(d - k, k).is_zero()) out.push_back({d - k, k, &a.at(d - k, k)});
  return out;  // degree-major
}

}  // namespace

// ---------------------------------------------------------------- UniSeries

UniSeries::UniSeries(int order, bool real) : order_(order), real_(real) {
  if (order < 0) throw SeriesError("negative order");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

UniSeries UniSeries::identity(int order) { return monomial(order, 1, Complex(1)); }

UniSeries UniSeries::monomial(int order, int n, const Complex& c) {
  UniSeries s(order, mpfr_zero_p(c.im.backend().data()) != 0);
  if (n <= order) s[n] = c;
  return s;
}

Complex UniSeries::coeff(int n) const {
  if (n < 0 || n > order_) return {};
  return c_[static_cast<std::size_t>(n)];
}

UniSeries UniSeries::truncated(int order) const {
  UniSeries r(order, real_);
  for (int n = 0; n <= std::min(order, order_); ++n) r[n] = (*this)[n];
  return r;
}

UniSeries UniSeries::conj() const {
  UniSeries r(order_, real_);
  for (int n = 0; n <= order_; ++n) r[n] = (*this)[n].conj();
  return r;
}

Real UniSeries::make_real() {
  Real worst(0);
  for (auto& c : c_) {
    const Real a = abs(c.im);
    if (a > worst) worst = a;
    c.im = 0;
  }
  real_ = true;
  return worst;
}

Real UniSeries::max_abs() const {
  Real m(0);
  for (const auto& c : c_) {
    const Real a = c.abs();
    if (a > m) m = a;
  }
  return m;
}

Real UniSeries::max_abs_imag() const {
  Real m(0);
  for (const auto& c : c_) {
    const Real a = abs(c.im);
    if (a > m) m = a;
  }
  return m;
}

bool UniSeries::is_even(const Real& tol) const {
  for (int n = 1; n <= order_; n += 2)
    if ((*this)[n].abs() > tol) return false;
  return true;
}

bool UniSeries::is_odd(const Real& tol) const {
  for (int n = 0; n <= order_; n += 2)
    if ((*this)[n].abs() > tol) return false;
  return true;
}

UniSeries& UniSeries::operator+=(const UniSeries& o) {
  require_same_order(order_, o.order_, "add");
  for (int n = 0; n <= order_; ++n) (*this)[n] += o[n];
  real_ = real_ && o.real_;
  return *this;
}

UniSeries& UniSeries::operator-=(const UniSeries& o) {
  require_same_order(order_, o.order_, "sub");
  for (int n = 0; n <= order_; ++n) (*this)[n] -= o[n];
  real_ = real_ && o.real_;
  return *this;
}

UniSeries& UniSeries::operator*=(const Complex& s) {
  for (auto& c : c_) c *= s;
  real_ = real_ && mpfr_zero_p(s.im.backend().data());
  return *this;
}

UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }
UniSeries operator*(const Complex& s, UniSeries a) { return a *= s; }

UniSeries mul(const UniSeries& a, const UniSeries& b) {
  require_same_order(a.order(), b.order(), "mul");
  const int n = a.order();
  UniSeries r(n, a.is_real() && b.is_real());
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j)
      if (!b[j].is_zero()) fma_acc(r[i + j], a[i], b[j]);
  }
  return r;
}

namespace {

int min_degree(const UniSeries& h) {
  for (int n = 0; n <= h.order(); ++n)
    if (!h[n].is_zero()) return n;
  return h.order() + 1;
}

}  // namespace

UniSeries compose(const UniSeries& g, const UniSeries& h) {
  if (h.order() < g.order()) throw SeriesError("compose: inner series truncated below outer order");
  if (h[0].abs() > leading_tolerance()) throw SeriesError("compose: inner series has a constant term");
  const int n = g.order();
  UniSeries inner = h.truncated(n);
  inner[0] = Complex();
  const int m0 = min_degree(inner);
  UniSeries acc(n, g.is_real());
  if (m0 > n) {
    acc[0] = g[0];
    return acc;
  }
  // Horner; terms g_k h^k with k·m0 > n vanish
  const int top = std::min(n, n / m0);
  acc[0] = g[top];
  for (int k = top - 1; k >= 0; --k) {
    acc = mul(acc, inner);
    acc[0] += g[k];
  }
  acc.set_real(g.is_real() && h.is_real());
  return acc;
}

UniSeries reciprocal(const UniSeries& a) {
  if (a[0].is_zero()) throw SeriesError("reciprocal: vanishing constant term");
  const int n = a.order();
  UniSeries b(n, a.is_real());
  const Complex inv0 = Complex(1) / a[0];
  b[0] = inv0;
  for (int m = 1; m <= n; ++m) {
    Complex s;
    for (int k = 1; k <= m; ++k)
      if (!a[k].is_zero()) fma_acc(s, a[k], b[m - k]);
    b[m] = -(s * inv0);
  }
  return b;
}

UniSeries invert(const UniSeries& g) {
  const int n = g.order();
  if (n < 1) throw SeriesError("invert: order must be at least 1");
  if (g[1].abs() <= leading_tolerance()) throw SeriesError("invert: vanishing linear part");
  if (g[0].abs() > leading_tolerance()) throw SeriesError("invert: nonzero constant term");
  // Lagrange: [t^m] g⁻¹ = (1/m) [t^{m−1}] (t/g)^m
  UniSeries shifted(n - 1, g.is_real());
  for (int k = 0; k < n; ++k) shifted[k] = g[k + 1];
  const UniSeries phi = reciprocal(shifted);
  UniSeries h(n, g.is_real());
  UniSeries pw = phi;
  for (int m = 1; m <= n; ++m) {
    if (m > 1) pw = mul(pw, phi);
    h[m] = pw[m - 1];
    h[m] *= Real(1) / m;
  }
  return h;
}

UniSeries derivative(const UniSeries& a) {
  const int n = std::max(a.order() - 1, 0);
  UniSeries r(n, a.is_real());
  for (int k = 1; k <= a.order(); ++k) r[k - 1] = Real(k) * a[k];
  return r;
}

UniSeries scale_argument(const UniSeries& a, const Complex& s) {
  UniSeries r = a;
  Complex p(1);
  for (int k = 0; k <= a.order(); ++k) {
    r[k] = a[k] * p;
    p *= s;
  }
  r.set_real(a.is_real() && mpfr_zero_p(s.im.backend().data()));
  return r;
}

UniSeries sqrt1p(const UniSeries& u) {
  if (u[0].abs() > leading_tolerance()) throw SeriesError("sqrt1p: argument has a constant term");
  const int n = u.order();
  UniSeries s(n, u.is_real());
  s[0] = Complex(1);
  for (int m = 1; m <= n; ++m) {
    Complex acc = u[m];
    for (int i = 1; i < m; ++i) acc -= s[i] * s[m - i];
    s[m] = Real(0.5) * acc;
  }
  return s;
}

UniSeries exp(const UniSeries& u) {
  if (u[0].abs() > leading_tolerance()) throw SeriesError("exp: argument has a constant term");
  const int n = u.order();
  UniSeries e(n, u.is_real());
  e[0] = Complex(1);
  for (int m = 1; m <= n; ++m) {
    Complex acc;
    for (int k = 1; k <= m; ++k)
      if (!u[k].is_zero()) fma_acc(acc, Real(k) * u[k], e[m - k]);
    e[m] = (Real(1) / m) * acc;
  }
  return e;
}

UniSeries log(const UniSeries& v) {
  if ((v[0] - Complex(1)).abs() > leading_tolerance())
    throw SeriesError("log: argument must have constant term 1");
  const int n = v.order();
  UniSeries out(n, v.is_real());
  if (n == 0) return out;
  UniSeries vt = v;
  vt[0] = Complex(1);
  const UniSeries q = mul(derivative(vt).truncated(n), reciprocal(vt)).truncated(n - 1);
  for (int m = 1; m <= n; ++m) out[m] = (Real(1) / m) * q[m - 1];
  return out;
}

UniSeries sqrt1p_taylor(int order) {
  UniSeries t(order, true);
  t[0] = Complex(1);
  // binom(1/2, n)
  Real c(1);
  for (int k = 1; k <= order; ++k) {
    c = c * (Real(0.5) - (k - 1)) / k;
    t[k] = Complex(c);
  }
  return t;
}

UniSeries exp_taylor(int order) {
  UniSeries t(order, true);
  Real c(1);
  t[0] = Complex(c);
  for (int k = 1; k <= order; ++k) {
    c /= k;
    t[k] = Complex(c);
  }
  return t;
}

UniSeries log1p_taylor(int order) {
  UniSeries t(order, true);
  for (int k = 1; k <= order; ++k) t[k] = Complex(Real(k % 2 ? 1 : -1) / k);
  return t;
}

// ---------------------------------------------------------------- BiSeries

BiSeries::BiSeries(int order) : order_(order) {
  if (order < 0) throw SeriesError("negative order");
  c_.resize(size_for(order));
}

BiSeries BiSeries::monomial(int order, int j, int k, const Complex& c) {
  BiSeries s(order);
  if (j + k <= order) s.at(j, k) = c;
  return s;
}

Complex BiSeries::coeff(int j, int k) const {
  if (j < 0 || k < 0 || j + k > order_) return {};
  return at(j, k);
}

BiSeries BiSeries::truncated(int order) const {
  BiSeries r(order);
  const int top = std::min(order, order_);
  for (std::size_t i = 0; i < size_for(top); ++i) r.c_[i] = c_[i];
  return r;
}

BiSeries BiSeries::homogeneous_part(int d) const {
  BiSeries r(order_);
  if (d < 0 || d > order_) return r;
  for (int k = 0; k <= d; ++k) r.at(d - k, k) = at(d - k, k);
  return r;
}

int BiSeries::min_degree() const {
  for (int d = 0; d <= order_; ++d)
    for (int k = 0; k <= d; ++k)
      if (!at(d - k, k).is_zero()) return d;
  return order_ + 1;
}

Real BiSeries::max_abs() const {
  Real m(0);
  for (const auto& c : c_) {
    if (c.is_zero()) continue;
    const Real a = c.abs();
    if (a > m) m = a;
  }
  return m;
}

Real BiSeries::max_abs_degree(int d) const {
  Real m(0);
  if (d < 0 || d > order_) return m;
  for (int k = 0; k <= d; ++k) {
    const Real a = at(d - k, k).abs();
    if (a > m) m = a;
  }
  return m;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  require_same_order(order_, o.order_, "add");
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  require_same_order(order_, o.order_, "sub");
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  return *this;
}

BiSeries& BiSeries::operator*=(const Complex& s) {
  for (auto& c : c_)
    if (!c.is_zero()) c *= s;
  return *this;
}

BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
BiSeries operator*(const Complex& s, BiSeries a) { return a *= s; }

BiSeries mul(const BiSeries& a, const BiSeries& b) {
  require_same_order(a.order(), b.order(), "mul");
  const int n = a.order();
  BiSeries r(n);
  const auto na = nonzeros(a);
  const auto nb = nonzeros(b);
  for (const auto& x : na) {
    const int room = n - x.j - x.k;
    for (const auto& y : nb) {
      if (y.j + y.k > room) break;
      fma_acc(r.at(x.j + y.j, x.k + y.k), *x.c, *y.c);
    }
  }
  return r;
}

BiSeries tilde(const BiSeries& f) {
  BiSeries r(f.order());
  for (int d = 0; d <= f.order(); ++d)
    for (int k = 0; k <= d; ++k) r.at(k, d - k) = f.at(d - k, k).conj();
  return r;
}

BiSeries square_modulus(const BiSeries& f) { return mul(f, tilde(f)); }

Real hermitian_defect(const BiSeries& f) {
  Real m(0);
  for (int d = 0; d <= f.order(); ++d)
    for (int k = 0; k <= d; ++k) {
      const Real e = (f.at(d - k, k) - f.at(k, d - k).conj()).abs();
      if (e > m) m = e;
    }
  return m;
}

BiSeries hermitian_part(const BiSeries& f) {
  BiSeries r = f + tilde(f);
  r *= Complex(0.5);
  return r;
}

namespace {

void require_no_constant(const BiSeries& g, const char* what) {
  if (g.at(0, 0).abs() > leading_tolerance())
    throw SeriesError(std::string(what) + ": inner series has a nonzero constant term");
}

}  // namespace

BiSeries compose(const BiSeries& f, const BiSeries& g1, const BiSeries& g2) {
  const int n = f.order();
  if (g1.order() < n || g2.order() < n) throw SeriesError("compose: inner series truncated below outer order");
  require_no_constant(g1, "compose");
  require_no_constant(g2, "compose");
  BiSeries a = g1.truncated(n), b = g2.truncated(n);
  a.at(0, 0) = Complex();
  b.at(0, 0) = Complex();

  // powers of the second argument, truncated
  std::vector<BiSeries> pw;
  pw.reserve(static_cast<std::size_t>(n) + 1);
  pw.push_back(BiSeries::one(n));
  const int mb = std::max(b.min_degree(), 1);
  for (int k = 1; k <= n && k * mb <= n; ++k) pw.push_back(mul(pw.back(), b));

  auto inner = [&](int j) {
    BiSeries s(n);
    for (int k = 0; j + k <= n && k < static_cast<int>(pw.size()); ++k) {
      const Complex& c = f.at(j, k);
      if (c.is_zero()) continue;
      const auto& p = pw[static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < BiSeries::size_for(n); ++i) {
        const Complex& pc = p.data()[i];
        if (!pc.is_zero()) fma_acc(s.data()[i], c, pc);
      }
    }
    return s;
  };

  const int ma = std::max(a.min_degree(), 1);
  const int top = std::min(n, n / ma);
  BiSeries acc = inner(top);
  for (int j = top - 1; j >= 0; --j) acc = mul(acc, a) + inner(j);
  return acc;
}

BiSeries hat_compose(const BiSeries& L, const BiSeries& F) { return compose(L, F, tilde(F)); }

BiSeries invert_pair(const BiSeries& phi) {
  const int n = phi.order();
  require_no_constant(phi, "invert_pair");
  if (phi.coeff(1, 0).abs() <= leading_tolerance()) throw SeriesError("invert_pair: vanishing linear part");
  if (phi.coeff(0, 1).abs() > leading_tolerance())
    throw SeriesError("invert_pair: linear part must be a multiple of z");
  const Complex a = phi.coeff(1, 0);
  BiSeries psi = BiSeries::monomial(n, 1, 0, Complex(1) / a);
  const BiSeries z = BiSeries::z(n);
  for (int d = 2; d <= n; ++d) {
    const BiSeries r = compose(phi, psi, tilde(psi)) - z;
    for (int k = 0; k <= d; ++k) psi.at(d - k, k) -= r.at(d - k, k) / a;
  }
  return psi;
}

UniSeries diagonal(const BiSeries& L) {
  UniSeries r(L.order());
  for (int d = 0; d <= L.order(); ++d)
    for (int k = 0; k <= d; ++k) r[d] += L.at(d - k, k);
  const Real scale = std::max(Real(1), L.max_abs());
  if (hermitian_defect(L) <= leading_tolerance() * scale) r.make_real();
  return r;
}

BiSeries compose(const UniSeries& g, const BiSeries& L) {
  const int n = L.order();
  require_no_constant(L, "compose");
  BiSeries inner = L;
  inner.at(0, 0) = Complex();
  const int m0 = inner.min_degree();
  BiSeries acc(n);
  if (m0 > n) {
    acc.at(0, 0) = g.coeff(0);
    return acc;
  }
  const int top = std::min(g.order(), n / m0);
  acc.at(0, 0) = g.coeff(top);
  for (int k = top - 1; k >= 0; --k) {
    acc = mul(acc, inner);
    acc.at(0, 0) += g.coeff(k);
  }
  return acc;
}

UniSeries compose(const BiSeries& L, const UniSeries& c1, const UniSeries& c2) {
  const int n = L.order();
  if (c1.order() < n || c2.order() < n) throw SeriesError("compose: curve truncated below outer order");
  if (c1[0].abs() > leading_tolerance() || c2[0].abs() > leading_tolerance())
    throw SeriesError("compose: curve does not pass through the origin");
  UniSeries a = c1.truncated(n), b = c2.truncated(n);
  a[0] = Complex();
  b[0] = Complex();
  std::vector<UniSeries> pw{UniSeries::monomial(n, 0, Complex(1))};
  for (int k = 1; k <= n; ++k) pw.push_back(mul(pw.back(), b));
  auto inner = [&](int j) {
    UniSeries s(n);
    for (int k = 0; j + k <= n; ++k) {
      const Complex& c = L.at(j, k);
      if (c.is_zero()) continue;
      for (int m = 0; m <= n; ++m)
        if (!pw[static_cast<std::size_t>(k)][m].is_zero()) fma_acc(s[m], c, pw[static_cast<std::size_t>(k)][m]);
    }
    return s;
  };
  UniSeries acc = inner(n);
  for (int j = n - 1; j >= 0; --j) acc = mul(acc, a) + inner(j);
  return acc;
}

BiSeries of_zw(const UniSeries& g, int order) {
  BiSeries r(order);
  for (int n = 0; 2 * n <= order && n <= g.order(); ++n) r.at(n, n) = g[n];
  return r;
}

BiSeries of_z(const UniSeries& g, int order) {
  BiSeries r(order);
  for (int n = 0; n <= order && n <= g.order(); ++n) r.at(n, 0) = g[n];
  return r;
}

BiSeries reciprocal(const BiSeries& a) {
  const Complex a0 = a.at(0, 0);
  if (a0.is_zero()) throw SeriesError("reciprocal: vanishing constant term");
  const Complex inv0 = Complex(1) / a0;
  BiSeries t = inv0 * a;
  t.at(0, 0) = Complex();
  UniSeries geo(a.order(), true);
  for (int k = 0; k <= a.order(); ++k) geo[k] = Complex(k % 2 ? -1 : 1);
  BiSeries r = compose(geo, t);
  r *= inv0;
  return r;
}

BiSeries sqrt1p(const BiSeries& u) {
  if (u.at(0, 0).abs() > leading_tolerance()) throw SeriesError("sqrt1p: argument has a constant term");
  return compose(sqrt1p_taylor(u.order()), u);
}

BiSeries exp(const BiSeries& u) {
  if (u.at(0, 0).abs() > leading_tolerance()) throw SeriesError("exp: argument has a constant term");
  return compose(exp_taylor(u.order()), u);
}

BiSeries log(const BiSeries& v) {
  if ((v.at(0, 0) - Complex(1)).abs() > leading_tolerance())
    throw SeriesError("log: argument must have constant term 1");
  BiSeries t = v;
  t.at(0, 0) = Complex();
  return compose(log1p_taylor(v.order()), t);
}

BiSeries derivative_z(const BiSeries& a) {
  const int n = std::max(a.order() - 1, 0);
  BiSeries r(n);
  for (int d = 1; d <= a.order(); ++d)
    for (int k = 0; k < d; ++k) r.at(d - k - 1, k) = Real(d - k) * a.at(d - k, k);
  return r;
}

BiSeries derivative_w(const BiSeries& a) {
  const int n = std::max(a.order() - 1, 0);
  BiSeries r(n);
  for (int d = 1; d <= a.order(); ++d)
    for (int k = 1; k <= d; ++k) r.at(d - k, k - 1) = Real(k) * a.at(d - k, k);
  return r;
}

BiSeries linear_substitute(const BiSeries& f, const Complex& a, const Complex& b, const Complex& c,
                           const Complex& d) {
  const int n = f.order();
  // powers of the two linear forms as homogeneous coefficient rows indexed by the w-exponent
  auto powers = [n](const Complex& p, const Complex& q) {
    std::vector<std::vector<Complex>> rows{{Complex(1)}};
    for (int e = 1; e <= n; ++e) {
      const auto& prev = rows.back();
      std::vector<Complex> next(static_cast<std::size_t>(e) + 1);
      for (int k = 0; k < e; ++k) {
        fma_acc(next[static_cast<std::size_t>(k)], prev[static_cast<std::size_t>(k)], p);
        fma_acc(next[static_cast<std::size_t>(k) + 1], prev[static_cast<std::size_t>(k)], q);
      }
      rows.push_back(std::move(next));
    }
    return rows;
  };
  const auto X = powers(a, b);
  const auto Y = powers(c, d);
  BiSeries r(n);
  for (int deg = 0; deg <= n; ++deg)
    for (int q = 0; q <= deg; ++q) {
      const int p = deg - q;
      const Complex& coef = f.at(p, q);
      if (coef.is_zero()) continue;
      const auto& xp = X[static_cast<std::size_t>(p)];
      const auto& yq = Y[static_cast<std::size_t>(q)];
      for (int i = 0; i <= p; ++i) {
        if (xp[static_cast<std::size_t>(i)].is_zero()) continue;
        const Complex s = coef * xp[static_cast<std::size_t>(i)];
        for (int l = 0; l <= q; ++l)
          if (!yq[static_cast<std::size_t>(l)].is_zero())
            fma_acc(r.at(deg - i - l, i + l), s, yq[static_cast<std::size_t>(l)]);
      }
    }
  return r;
}

BiSeries xy_to_zw(const BiSeries& f) {
  // x = (z+w)/2, y = (z−w)/(2i) = −(i/2) z + (i/2) w
  return linear_substitute(f, Complex(0.5), Complex(0.5), Complex(0.0, -0.5), Complex(0.0, 0.5));
}

BiSeries zw_to_xy(const BiSeries& f) {
  // z = x + iy, w = x − iy
  return linear_substitute(f, Complex(1), Complex(0.0, 1.0), Complex(1), Complex(0.0, -1.0));
}

}  // namespace geonf
