#include "geonf/foliation.hpp"

#include "geonf/errors.hpp"

#include <algorithm>

namespace geonf {

Real involution_defect(const UniSeries& tau) {
  UniSeries d = compose(tau, tau);
  d[1] -= Complex(1);
  return d.max_abs();
}

UniSeries square_root_chart(const UniSeries& Lambda) {
  const int n = Lambda.order();
  if (n < 2) throw SeriesError("square_root_chart: order must be at least 2");
  const Real a = Lambda[2].re;
  if (a <= 0) throw SeriesError("square_root_chart: leading coefficient must be positive");
  UniSeries u(n - 2, true);
  for (int k = 1; k <= n - 2; ++k) u[k] = Complex(Lambda[k + 2].re / a);
  const UniSeries s = sqrt1p(u);
  const Real lead = sqrt(a);
  UniSeries ell(n - 1, true);
  for (int k = 0; k <= n - 2; ++k) ell[k + 1] = Complex(lead * s[k].re);
  return ell;
}

namespace {

Involution conjugated_reflection(const UniSeries& ell) {
  UniSeries minus = ell;
  minus *= Complex(-1);
  UniSeries tau = compose(invert(ell), minus);
  tau.make_real();
  return {tau, involution_defect(tau)};
}

}  // namespace

Involution tau_via_ell(const BiSeries& L) { return conjugated_reflection(ell_of(L)); }

Involution tau_via_recursion(const UniSeries& Lambda) {
  const int N = Lambda.order();
  if (N < 2) throw SeriesError("tau_via_recursion: order must be at least 2");
  std::vector<Real> a(static_cast<std::size_t>(N) + 1, Real(0));  // Λ*
  for (int k = 3; k <= N; ++k) a[static_cast<std::size_t>(k)] = Lambda[k].re;
  const int M = N - 1;
  std::vector<Real> t(static_cast<std::size_t>(M) + 1, Real(0));  // τ*
  // pw[r][e] = [τ*^r]_e, filled as soon as every contributing t_i is known
  std::vector<std::vector<Real>> pw(static_cast<std::size_t>(N) + 1,
                                    std::vector<Real>(static_cast<std::size_t>(N) + 1, Real(0)));
  // binom(k, r)
  std::vector<std::vector<Real>> binom(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    binom[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k) + 1, Real(1));
    for (int r = 1; r < k; ++r)
      binom[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] =
          binom[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(r - 1)] +
          binom[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(r)];
  }
  auto absorb = [&](int m) {  // t_m just became known
    for (int r = 1; m + 2 * (r - 1) <= N; ++r) {
      const int e = m + 2 * (r - 1);
      Real& slot = pw[static_cast<std::size_t>(r)][static_cast<std::size_t>(e)];
      if (r == 1) {
        slot = t[static_cast<std::size_t>(m)];
        continue;
      }
      slot = 0;
      for (int i = 2; i <= e - 2 * (r - 1); ++i)
        slot += t[static_cast<std::size_t>(i)] * pw[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(e - i)];
    }
  };
  for (int n = 3; n <= N; ++n) {
    Real rhs(0);
    if (n % 2 == 1) rhs -= 2 * a[static_cast<std::size_t>(n)];
    for (int i = 2; i <= n - 2; ++i)
      rhs += t[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(n - i)];
    // Σ_r Σ_k a_k binom(k,r) (−1)^{k−r} [τ*^r]_{n−k+r}
    for (int k = 3; k <= n; ++k) {
      if (a[static_cast<std::size_t>(k)] == 0) continue;
      for (int r = 1; r <= k; ++r) {
        const int e = n - k + r;
        if (e < 2 * r) continue;
        const Real& p = pw[static_cast<std::size_t>(r)][static_cast<std::size_t>(e)];
        if (p == 0) continue;
        Real term = a[static_cast<std::size_t>(k)] * binom[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] * p;
        if ((k - r) % 2) rhs -= term; else rhs += term;
      }
    }
    t[static_cast<std::size_t>(n - 1)] = rhs / 2;
    absorb(n - 1);
  }
  UniSeries tau(M, true);
  tau[1] = Complex(-1);
  for (int i = 2; i <= M; ++i) tau[i] = Complex(t[static_cast<std::size_t>(i)]);
  return {tau, involution_defect(tau)};
}

Involution tau_via_recursion(const BiSeries& L) {
  UniSeries lam = diagonal(L);
  lam.make_real();
  return tau_via_recursion(lam);
}

Balanced balanced(const DiffeoJet& F, int order, const Real& tol) {
  const AdmissiblePair seed = resonant_free(F, order, false);
  const UniSeries ell = ell_of(seed.L);
  Involution tau = conjugated_reflection(ell);
  // h(z) = −z τ(z), of order N
  UniSeries h(order, true);
  for (int k = 1; k <= tau.tau.order(); ++k) h[k + 1] = -tau.tau[k];
  // ℓ⁻¹ is known through order N−1; h has no linear term, so its top coefficient never matters
  const UniSeries E = compose(h, invert(ell).truncated(order));
  Real odd(0);
  for (int k = 1; k <= order; k += 2) odd = std::max(odd, E[k].abs());
  if (odd > tol * std::max(Real(1), E.max_abs()))
    throw CheckError("balanced: h∘ℓ⁻¹ has odd part " + to_decimal(odd));
  UniSeries g(order / 2, true);
  for (int k = 1; 2 * k <= order; ++k) g[k] = Complex(E[2 * k].re);
  AdmissiblePair pair = group_act(g, seed, F);
  UniSeries check = diagonal(pair.L);
  for (int k = 1; k <= tau.tau.order(); ++k) check[k + 1] += tau.tau[k];
  return {std::move(pair), std::move(tau), std::move(g), check.max_abs(), odd};
}

Involution tau_along_curve(const BiSeries& L, const UniSeries& c) {
  const int n = L.order();
  if (c.coeff(1).is_zero()) throw SeriesError("tau_along_curve: c'(0) must not vanish");
  const UniSeries cc = c.truncated(n);
  UniSeries lam = compose(L, cc, cc.conj());
  lam.make_real();
  return conjugated_reflection(square_root_chart(lam));
}

CurveMatch solve_curve_match(const BiSeries& L, const BiSeries& Lp) {
  const int N = std::min(L.order(), Lp.order());
  const BiSeries Lt = L.truncated(N);
  UniSeries target = diagonal(Lp.truncated(N));
  UniSeries c(N, true);
  c[1] = Complex(1);
  for (int n = 3; n <= N; ++n) {
    const UniSeries cur = compose(Lt, c, c);
    c[n - 1] = Complex((target[n].re - cur[n].re) / 2);
  }
  const UniSeries fin = compose(Lt, c, c);
  UniSeries out = c.truncated(N - 1);
  return {out, (target - fin).max_abs()};
}

}  // namespace geonf
