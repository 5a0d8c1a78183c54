#include "geonf/admissible.hpp"

#include "geonf/errors.hpp"

#include <algorithm>
#include <string>

namespace geonf {

Real default_tolerance() {
  Real t(10);
  return pow(t, Real(-30) * working_bits() / 256);
}

namespace {

using Part = std::vector<std::pair<int, Complex>>;

std::vector<Part> graded(const BiSeries& s) {
  std::vector<Part> g(static_cast<std::size_t>(s.order()) + 1);
  for (int d = 0; d <= s.order(); ++d)
    for (int k = 0; k <= d; ++k)
      if (!s.at(d - k, k).is_zero()) g[static_cast<std::size_t>(d)].emplace_back(k, s.at(d - k, k));
  return g;
}

Part compress(std::vector<Complex>& dense) {
  Part p;
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (!dense[k].is_zero()) p.emplace_back(static_cast<int>(k), std::move(dense[k]));
  return p;
}

}  // namespace

AdmissibleStepper::AdmissibleStepper(const DiffeoJet& F, DiagonalRule rule, int order)
    : F_(F.with_order(order)), rule_(std::move(rule)), order_(order), L_(order), Gamma_(order / 2, true) {
  if (order < 2) throw std::invalid_argument("solver order must be at least 2");
  L_.at(1, 1) = Complex(1);
  Gamma_[1] = Complex(1);
  div_.reserve(2 * static_cast<std::size_t>(order) + 1);
  for (int n = -order; n <= order; ++n) div_.push_back(F_.divisor(n));
  T_.assign(static_cast<std::size_t>(order) + 1, {});
  Lpow_.assign(static_cast<std::size_t>(order / 2) + 1, std::vector<Part>(static_cast<std::size_t>(order) + 1));
  Lpow_[1][2].emplace_back(1, Complex(1));
  rebuild_map_tables();
}

void AdmissibleStepper::rebuild_map_tables() {
  const BiSeries& Fs = F_.series();
  const BiSeries Ft = tilde(Fs);
  P_.clear();
  Q_.clear();
  P_.push_back(graded(BiSeries::one(order_)));
  Q_.push_back(graded(BiSeries::one(order_)));
  BiSeries pf = Fs, pt = Ft;
  for (int j = 1; j <= order_; ++j) {
    if (j > 1) {
      pf = mul(pf, Fs);
      pt = mul(pt, Ft);
    }
    P_.push_back(graded(pf));
    Q_.push_back(graded(pt));
  }
  for (auto& t : T_) t.assign(static_cast<std::size_t>(order_) + 1, {});
  for (int d = 2; d < m_; ++d)
    for (int k = 0; k <= d; ++k) absorb_into_T(d - k, k);
}

void AdmissibleStepper::absorb_into_T(int j, int k) {
  const Complex& c = L_.at(j, k);
  if (c.is_zero()) return;
  auto& Tj = T_[static_cast<std::size_t>(j)];
  const auto& Qk = Q_[static_cast<std::size_t>(k)];
  for (int e = k; e <= order_ - j; ++e) {
    const auto& part = Qk[static_cast<std::size_t>(e)];
    if (part.empty()) continue;
    auto& dense = Tj[static_cast<std::size_t>(e)];
    if (dense.empty()) dense.resize(static_cast<std::size_t>(e) + 1);
    for (const auto& [s, q] : part) fma_acc(dense[static_cast<std::size_t>(s)], c, q);
  }
}

void AdmissibleStepper::compute_powers_of_L(int m) {
  for (int n = 2; 2 * n <= m && n < static_cast<int>(Lpow_.size()); ++n) {
    auto& slot = Lpow_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    std::vector<Complex> acc(static_cast<std::size_t>(m) + 1);
    bool any = false;
    for (int a = 2; a <= m - 2 * (n - 1); ++a) {
      const auto& la = Lpow_[1][static_cast<std::size_t>(a)];
      const auto& rest = Lpow_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - a)];
      if (la.empty() || rest.empty()) continue;
      for (const auto& [s1, c1] : la)
        for (const auto& [s2, c2] : rest) {
          fma_acc(acc[static_cast<std::size_t>(s1 + s2)], c1, c2);
          any = true;
        }
    }
    slot = any ? compress(acc) : Part{};
  }
}

const AdmissibleStepper::Preview& AdmissibleStepper::preview() {
  if (preview_) return *preview_;
  if (done()) throw std::logic_error("stepper already reached its order");
  const int m = m_;
  const auto mz = static_cast<std::size_t>(m);
  std::vector<Complex> X(mz + 1);

  // X = Σ_{j+k<m} L_jk [F^j F̃^k]_m
  for (int j = 0; j <= m; ++j) {
    const auto& Tj = T_[static_cast<std::size_t>(j)];
    const auto& Pj = P_[static_cast<std::size_t>(j)];
    for (int d1 = j; d1 <= m; ++d1) {
      const auto& part = Pj[static_cast<std::size_t>(d1)];
      const auto& tpart = Tj[static_cast<std::size_t>(m - d1)];
      if (part.empty() || tpart.empty()) continue;
      for (const auto& [s1, p] : part)
        for (std::size_t s2 = 0; s2 < tpart.size(); ++s2)
          if (!tpart[s2].is_zero()) fma_acc(X[static_cast<std::size_t>(s1) + s2], p, tpart[s2]);
    }
  }

  // Y = Σ_{2 ≤ n < m/2} Γ_n [L^n]_m
  compute_powers_of_L(m);
  for (int n = 2; 2 * n < m; ++n) {
    const Complex& g = Gamma_[n];
    if (g.is_zero()) continue;
    for (const auto& [s, c] : Lpow_[static_cast<std::size_t>(n)][mz]) {
      Complex t;
      fma_acc(t, g, c);
      X[static_cast<std::size_t>(s)] -= t;
    }
  }

  Preview pv;
  pv.degree = m;
  pv.A = X;
  pv.L.resize(mz + 1);
  const Real thr = small_divisor_threshold();
  Complex offdiag_sum;
  for (int s = 0; s <= m; ++s) {
    const int r = m - s;
    if (r == s) continue;
    const Complex& d = div_[static_cast<std::size_t>(r - s + order_)];
    if (d.abs() < thr)
      throw GuardError("small divisor |1 − λ^" + std::to_string(r - s) + "| at (r,s) = (" + std::to_string(r) +
                       "," + std::to_string(s) + "); solved through degree " + std::to_string(m - 1));
    if (!X[static_cast<std::size_t>(s)].is_zero()) pv.L[static_cast<std::size_t>(s)] = X[static_cast<std::size_t>(s)] / d;
    offdiag_sum += pv.L[static_cast<std::size_t>(s)];
  }
  if (m % 2 == 0) {
    const int n = m / 2;
    pv.gamma = X[static_cast<std::size_t>(n)];
    Complex diag = rule_.target.coeff(n);
    if (rule_.kind == DiagonalRule::Kind::chi) diag -= offdiag_sum;
    diag.im = 0;
    pv.L[static_cast<std::size_t>(n)] = diag;
  }
  preview_ = std::move(pv);
  return *preview_;
}

void AdmissibleStepper::advance() {
  const Preview& pv = preview();
  const int m = m_;
  for (int s = 0; s <= m; ++s) L_.at(m - s, s) = pv.L[static_cast<std::size_t>(s)];
  if (pv.gamma && m / 2 <= Gamma_.order()) {
    Gamma_[m / 2] = *pv.gamma;
    Gamma_[m / 2].im = 0;
  }
  std::vector<Complex> row(pv.L);
  if (m / 1 < static_cast<int>(Lpow_[1].size())) Lpow_[1][static_cast<std::size_t>(m)] = compress(row);
  for (int s = 0; s <= m; ++s) absorb_into_T(m - s, s);
  ++m_;
  preview_.reset();
}

void AdmissibleStepper::run() {
  while (!done()) advance();
}

void AdmissibleStepper::set_map_coeff(int j, int k, const Complex& c) {
  if (j + k < m_ - 1) throw std::logic_error("set_map_coeff: degree already used by the committed solution");
  if (j + k > order_) throw std::out_of_range("set_map_coeff: degree exceeds the solver order");
  F_.set_coeff(j, k, c);
  rebuild_map_tables();
  preview_.reset();
}

AdmissiblePair AdmissibleStepper::result(bool verify) const {
  AdmissiblePair out{L_, Gamma_, Real(-1)};
  if (verify) out.residual = conjugacy_residual(F_, L_, Gamma_);
  return out;
}

AdmissiblePair solve_admissible(const DiffeoJet& F, const UniSeries& rho, int order, bool verify) {
  AdmissibleStepper st(F, DiagonalRule::resonant(rho), order);
  st.run();
  return st.result(verify);
}

AdmissiblePair solve_admissible_chi(const DiffeoJet& F, const UniSeries& chi, int order, bool verify) {
  if ((chi.coeff(1) - Complex(1)).abs() > default_tolerance())
    throw std::invalid_argument("chi target must be R + O(R^2)");
  AdmissibleStepper st(F, DiagonalRule::chi(chi), order);
  st.run();
  return st.result(verify);
}

AdmissiblePair resonant_free(const DiffeoJet& F, int order, bool verify) {
  return solve_admissible(F, UniSeries(order / 2, true), order, verify);
}

Real conjugacy_residual(const DiffeoJet& F, const BiSeries& L, const UniSeries& Gamma) {
  const int n = L.order();
  const BiSeries Fs = F.series().truncated(n);
  const BiSeries lhs = hat_compose(L, Fs);
  const BiSeries rhs = compose(Gamma, L);
  return (lhs - rhs).max_abs();
}

UniSeries resonant_part(const BiSeries& L) {
  UniSeries rho(L.order() / 2, true);
  for (int n = 2; 2 * n <= L.order(); ++n) rho[n] = Complex(L.at(n, n).re);
  return rho;
}

UniSeries chi_of(const BiSeries& L) {
  const UniSeries lam = diagonal(L);
  UniSeries chi(L.order() / 2, true);
  for (int n = 1; 2 * n <= L.order(); ++n) chi[n] = Complex(lam[2 * n].re);
  return chi;
}

UniSeries ell_of(const BiSeries& L) {
  const int n = L.order();
  if (n < 2) throw std::invalid_argument("ell_of: order must be at least 2");
  UniSeries lam = diagonal(L);
  lam.make_real();
  UniSeries u(n - 2, true);  // Λ/z² − 1
  for (int k = 1; k <= n - 2; ++k) u[k] = lam[k + 2];
  const UniSeries s = sqrt1p(u);
  UniSeries ell(n - 1, true);
  for (int k = 0; k <= n - 2; ++k) ell[k + 1] = s[k];
  return ell;
}

GammaFromL gamma_of(const BiSeries& L, const DiffeoJet& F, const Real& tol) {
  const int n = L.order();
  UniSeries D = diagonal(hat_compose(L, F.series().truncated(n)));
  const UniSeries linv = invert(ell_of(L)).truncated(n);  // D has no linear term, so ℓ⁻¹_N is not needed
  const UniSeries E = compose(D, linv);
  Real odd(0);
  for (int k = 1; k <= n; k += 2) {
    const Real a = E[k].abs();
    if (a > odd) odd = a;
  }
  const Real scale = std::max(Real(1), E.max_abs());
  if (odd > tol * scale)
    throw CheckError("gamma_of: L∘F̂∘ι∘ℓ⁻¹ has odd part " + to_decimal(odd) + "; L is not admissible for F");
  UniSeries G(n / 2, true);
  for (int k = 1; 2 * k <= n; ++k) G[k] = Complex(E[2 * k].re);
  return {G, odd};
}

AdmissiblePair group_act(const UniSeries& g, const AdmissiblePair& pair, const DiffeoJet& F) {
  const int n = pair.L.order();
  const UniSeries gg = g.truncated(n / 2);
  const BiSeries L = compose(gg, pair.L);
  UniSeries G = compose(gg, compose(pair.Gamma, invert(gg)));
  G.make_real();
  return {L, G, conjugacy_residual(F, L, G)};
}

UniSeries orbit_element(const BiSeries& L1, const BiSeries& L2) {
  const int n = std::min(L1.order(), L2.order());
  UniSeries g(n / 2, true);
  g[1] = Complex(1);
  for (int k = 2; 2 * k <= n; ++k) {
    const BiSeries cur = compose(g, L1.truncated(n));
    g[k] = Complex((L2.at(k, k) - cur.at(k, k)).re);
  }
  return g;
}

}  // namespace geonf
