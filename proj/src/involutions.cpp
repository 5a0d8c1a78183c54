#include "geonf/involutions.hpp"

#include "geonf/errors.hpp"

#include <algorithm>

namespace geonf {

UniSeries reflect(const UniSeries& a) {
  UniSeries r = a;
  for (int k = 1; k <= r.order(); k += 2) r[k] = -r[k];
  return r;
}

Real odd_part_max(const UniSeries& a) {
  Real m(0);
  for (int k = 1; k <= a.order(); k += 2) m = std::max(m, a[k].abs());
  return m;
}

Real even_part_max(const UniSeries& a) {
  Real m(0);
  for (int k = 0; k <= a.order(); k += 2) m = std::max(m, a[k].abs());
  return m;
}

namespace {

UniSeries sigma(int order) {
  UniSeries s(order, true);
  s[1] = Complex(-1);
  return s;
}

Real involution_defect_of(const UniSeries& tau) {
  UniSeries d = compose(tau, tau);
  d[1] -= Complex(1);
  return d.max_abs();
}

}  // namespace

Conjugator conjugator_of(const UniSeries& tau, const Real& tol) {
  const int n = tau.order();
  if ((tau.coeff(1) + Complex(1)).abs() > tol || tau.coeff(0).abs() > tol)
    throw std::invalid_argument("conjugator_of: τ must be −x + O(x²)");
  const Real inv = involution_defect_of(tau);
  if (inv > tol) throw CheckError("conjugator_of: τ∘τ − Id = " + to_decimal(inv) + " exceeds tolerance");
  const UniSeries id = UniSeries::identity(n);
  UniSeries U = id - tau, V = id + tau;
  U *= Complex(Real(1) / 2);
  V *= Complex(Real(1) / 2);
  U.set_real(tau.is_real());
  V.set_real(tau.is_real());
  const UniSeries Uinv = invert(U);
  const UniSeries E = compose(V, Uinv);
  const UniSeries conj = compose(Uinv, compose(sigma(n), U));
  const UniSeries fixed = compose(V, tau) - V;
  const UniSeries inverse = Uinv - (id + E);
  return {U, V, E, inv, (conj - tau).max_abs(), odd_part_max(E), fixed.max_abs(), inverse.max_abs()};
}

Conjugacy conjugators_between(const UniSeries& tau, const UniSeries& tau_p, const UniSeries& gamma, const Real& tol) {
  const int n = std::min({tau.order(), tau_p.order(), gamma.order()});
  if (even_part_max(gamma) > tol || (gamma.coeff(1) - Complex(1)).abs() > tol)
    throw std::invalid_argument("conjugators_between: γ must be odd and tangent to the identity");
  const Conjugator a = conjugator_of(tau.truncated(n), tol);
  const Conjugator b = conjugator_of(tau_p.truncated(n), tol);
  const UniSeries id = UniSeries::identity(n);
  const UniSeries psi = compose(id + b.E, compose(gamma.truncated(n), invert(id + a.E)));
  const UniSeries lhs = compose(psi, compose(tau.truncated(n), invert(psi)));
  return {psi, (lhs - tau_p.truncated(n)).max_abs()};
}

}  // namespace geonf
