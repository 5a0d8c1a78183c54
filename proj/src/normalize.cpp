#include "geonf/normalize.hpp"

#include "geonf/errors.hpp"

#include <algorithm>

namespace geonf {

namespace {

// x·s (or y·s when `in_y`) in the real chart, truncated at `order`
BiSeries shift(const BiSeries& s, bool in_y, int order) {
  BiSeries out(order);
  for (int d = 0; d + 1 <= order && d <= s.order(); ++d)
    for (int k = 0; k <= d; ++k) {
      const Complex& c = s.at(d - k, k);
      if (c.is_zero()) continue;
      if (in_y) out.at(d - k, k + 1) = c;
      else out.at(d - k + 1, k) = c;
    }
  return out;
}

Real offdiagonal_max(const BiSeries& s) {
  Real m(0);
  for (int d = 0; d <= s.order(); ++d)
    for (int k = 0; k <= d; ++k)
      if (2 * k != d) m = std::max(m, s.at(d - k, k).abs());
  return m;
}

}  // namespace

BiSeries morse_phi(const BiSeries& L) {
  const int N = L.order();
  if (N < 2) throw SeriesError("morse_phi: order must be at least 2");
  BiSeries Lxy = zw_to_xy(L);
  // x²A + 2xyB + y²C, each split homogeneous degree by degree
  BiSeries A(N), B(N), C(N);
  for (int d = 2; d <= N; ++d)
    for (int q = 0; q <= d; ++q) {
      const int p = d - q;
      const Real c = Lxy.at(p, q).re;
      if (c == 0) continue;
      if (p >= 2) A.at(p - 2, q) = Complex(c);
      else if (p == 1) B.at(0, q - 1) = Complex(c / 2);
      else C.at(0, q - 2) = Complex(c);
    }
  BiSeries Am1 = A, Cm1 = C;
  Am1.at(0, 0) -= Complex(1);
  Cm1.at(0, 0) -= Complex(1);
  const BiSeries a = sqrt1p(Am1);
  const BiSeries c = sqrt1p(Cm1);
  BiSeries q = mul(mul(B, B), reciprocal(mul(A, C)));
  q *= Complex(-1);
  const BiSeries d = sqrt1p(q);
  const BiSeries X = mul(shift(A, false, N) + shift(B, true, N), reciprocal(a));
  const BiSeries Y = shift(mul(c, d), true, N);
  BiSeries phi_xy = X + Complex(0, 1) * Y;
  for (int k = 0; k <= N; ++k) phi_xy.at(N - k, k) = Complex();
  BiSeries phi = xy_to_zw(phi_xy);
  for (int k = 0; k <= N; ++k) phi.at(N - k, k) = Complex();
  return phi;
}

NormalForm geometric_normal_form(const DiffeoJet& F, const BiSeries& phi, int order) {
  const BiSeries P = phi.truncated(order);
  const BiSeries psi = invert_pair(P);
  const BiSeries K = compose(F.series().truncated(order), psi, tilde(psi));
  BiSeries G = compose(P, K, tilde(K));
  for (int k = 0; k <= order; ++k) G.at(order - k, k) = Complex();  // depends on the undetermined Φ_N
  BiSeries mod = square_modulus(G);
  const Real off = offdiagonal_max(mod);
  return {G.truncated(order - 1), std::move(mod), off};
}

Polar polar_decompose(const DiffeoJet& F, const BiSeries& G, const Real& tol) {
  const int M = G.order();
  if (M < 2) throw SeriesError("polar_decompose: order must be at least 2");
  const Complex lam = F.lambda();
  // U = G/(λz); z divides G whenever |G|² depends on zw only
  Real not_divisible(0);
  for (int k = 1; k <= M; ++k) not_divisible = std::max(not_divisible, G.at(0, k).abs());
  BiSeries U(M - 1);
  for (int d = 0; d <= M - 1; ++d)
    for (int k = 0; k <= d; ++k) U.at(d - k, k) = G.at(d - k + 1, k) / lam;
  const BiSeries P = log(U);
  const BiSeries Pt = tilde(P);
  BiSeries re = P + Pt;
  re *= Complex(Real(1) / 2);
  BiSeries beta = P - Pt;
  beta *= Complex(Real(0), Real(-1) / (4 * pi()));  // (P − P̃)/(4πi)
  const Real radial = std::max(offdiagonal_max(re), not_divisible);
  if (radial > tol) throw CheckError("polar_decompose: |G| is not a function of |ζ|² (defect " + to_decimal(radial) + ")");
  UniSeries r((M - 1) / 2, true);
  for (int n = 1; 2 * n <= M - 1; ++n) r[n] = Complex(re.at(n, n).re);
  UniSeries f = exp(r);
  f[0] = Complex();
  f.make_real();

  BiSeries unit = mul(of_zw(f, M - 1) + BiSeries::one(M - 1), exp(Complex(0, 2) * pi() * beta));
  BiSeries rebuilt(M);
  for (int d = 0; d <= M - 1; ++d)
    for (int k = 0; k <= d; ++k) rebuilt.at(d - k + 1, k) = lam * unit.at(d - k, k);
  return {f, beta, radial, (rebuilt - G).max_abs()};
}

Conservativity is_formally_conservative(const DiffeoJet& F, int order, const Real& tol) {
  const AdmissiblePair p = resonant_free(F, order, false);
  UniSeries d = p.Gamma;
  d[1] -= Complex(1);
  const Real dev = d.max_abs();
  return {dev <= tol, p.Gamma, dev};
}

Linearization linearize_holomorphic(const DiffeoJet& F0, int order) {
  if (!F0.holomorphic()) throw std::invalid_argument("linearize_holomorphic: F must not depend on z̄");
  const DiffeoJet F = F0.with_order(order);
  const Complex lam = F.lambda();
  UniSeries f(order);
  for (int k = 1; k <= order; ++k) f[k] = F.series().at(k, 0);
  // [F^m]_n for m < n
  std::vector<UniSeries> pw{UniSeries::identity(order), f};
  for (int m = 2; m < order; ++m) pw.push_back(mul(pw.back(), f));
  UniSeries h(order);
  h[1] = Complex(1);
  const Real thr = small_divisor_threshold();
  for (int n = 2; n <= order; ++n) {
    Complex rhs;
    for (int m = 1; m < n; ++m)
      if (!h[m].is_zero()) fma_acc(rhs, h[m], pw[static_cast<std::size_t>(m)][n]);
    // h_n (λ − λ^n) = Σ_{m<n} h_m [F^m]_n, and λ − λ^n = λ(1 − λ^{n−1})
    const Complex div = lam * F.divisor(n - 1);
    if (div.abs() < thr) throw GuardError("linearize_holomorphic: small divisor at degree " + std::to_string(n));
    h[n] = rhs / div;
  }
  UniSeries lhs = compose(h, f);
  UniSeries rhs = h;
  rhs *= lam;
  const BiSeries hz = of_z(h, order);
  BiSeries L = square_modulus(hz);
  UniSeries id = UniSeries::identity(order / 2);
  id.set_real(true);
  const Real adm = conjugacy_residual(F, L, id);
  return {h, std::move(L), (lhs - rhs).max_abs(), adm};
}

}  // namespace geonf
