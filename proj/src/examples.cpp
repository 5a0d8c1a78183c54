#include "geonf/examples.hpp"

#include "geonf/errors.hpp"
#include "geonf/foliation.hpp"

#include <algorithm>
#include <cmath>

namespace geonf {

namespace {

unsigned omega_bits(const Omega& omega) {
  return static_cast<unsigned>(mpfr_get_prec(omega.value.backend().data()));
}

unsigned round_up_64(unsigned b) { return (b + 63) / 64 * 64; }

void require_jet_below(const DiffeoJet& jet, int degree) {
  const BiSeries& s = jet.series();
  for (int d = degree; d <= s.order(); ++d)
    for (int k = 0; k <= d; ++k)
      if (!s.at(d - k, k).is_zero())
        throw std::invalid_argument("jet has terms of degree " + std::to_string(d) +
                                    ", at or above the first constructed degree " + std::to_string(degree));
}

Real cos_bound(const Complex& lambda, long n) { return 2 * factorial(static_cast<unsigned long>(n)) * abs(lambda.re); }

// The stepper keeps [L^n]_e for n ≤ N/2 and e ≤ N: about N³/2 complex numbers.
void require_memory(int order, unsigned bits) {
  constexpr double kBudget = 4e9;
  const double n = order;
  const double bytes = n * n * n / 2 * 2 * (bits / 8.0 + 32);
  if (bytes > kBudget)
    throw GuardError("order " + std::to_string(order) + " at " + std::to_string(bits) + " bits needs about " +
                     std::to_string(static_cast<long>(bytes / 1e9)) + " GB of coefficient tables");
}

// Shared driver of the two Siegel-type constructions; `stride` is 1 (indices n_p) or 2 (indices 2n_p).
DivergentExample siegel_like(const Omega& omega, const DiffeoJet& jet, int p_max, unsigned requested, int stride) {
  if (p_max < 1) throw std::invalid_argument("p_max must be at least 1");
  std::vector<long> ns;
  {
    PrecisionScope scan(std::max(requested, omega_bits(omega)));
    ns = divergence_witnesses(omega, static_cast<std::size_t>(p_max), static_cast<long>(kFactorialBudget), stride, false);
  }
  DivergentExample out;
  if (ns.empty()) throw GuardError("no super-Liouville witness below the factorial budget");
  if (static_cast<int>(ns.size()) < p_max)
    out.stopped = "only " + std::to_string(ns.size()) + " witness(es) below the factorial budget";
  const int first = static_cast<int>(stride * ns.front());
  require_jet_below(jet, first + 1);
  const int order = static_cast<int>(stride * ns.back()) + 2;

  out.precision_bits = example_precision(omega, order, requested);
  require_memory(order, out.precision_bits);
  PrecisionScope scope(out.precision_bits);
  // the stride-1 construction adds even-degree terms, so the result is never flagged odd
  const DiffeoJet Fj = jet.with_order(order);
  BiSeries nl = Fj.series();
  nl.at(1, 0) = Complex();
  const DiffeoJet F0(Fj.omega(), nl, stride == 2 && jet.odd());
  const Complex lam = F0.lambda();
  AdmissibleStepper st(F0, DiagonalRule::resonant(UniSeries(order / 2, true)), order);
  for (std::size_t p = 0; p < ns.size(); ++p) {
    const int e = static_cast<int>(stride * ns[p]);
    while (st.next_degree() < e + 2) st.advance();
    const Complex G = st.preview().A[1];  // A_{e+1,1} with F_{1,e} = F_{e+1,0} = 0
    const Real s = (lam.re * G.re >= 0) ? Real(1) : Real(-1);
    st.set_map_coeff(1, e, Complex(s));
    st.set_map_coeff(e + 1, 0, Complex(s));
    st.advance();
    Witness w;
    w.p = static_cast<int>(p) + 1;
    w.n = ns[p];
    w.coefficient = "L_{" + std::to_string(e + 1) + ",1}";
    w.value = st.L().at(e + 1, 1).abs();
    w.bound = cos_bound(lam, ns[p]);
    w.holds = w.value >= w.bound;
    out.witnesses.push_back(std::move(w));
  }
  st.run();
  out.order = order;
  out.F = st.map();
  out.residual = conjugacy_residual(st.map(), st.L(), st.Gamma());
  return out;
}

}  // namespace

unsigned example_precision(const Omega& omega, int order, unsigned requested) {
  unsigned bits = std::max(requested, omega.cf ? omega.cf->required_bits() : 0u);
  PrecisionScope scope(std::max(bits, omega_bits(omega)));
  const DiffeoJet R = DiffeoJet::rotation(omega, 1);
  Real smallest(1);
  for (long m = 1; m <= order; ++m) smallest = std::min(smallest, R.divisor(m).abs());
  if (smallest == 0) throw GuardError("λ is a root of unity of order ≤ " + std::to_string(order));
  const double lg = -Real(log2(smallest)).convert_to<double>();
  bits = std::max(bits, static_cast<unsigned>(std::ceil(4 * std::max(lg, 0.0))) + 64);
  return round_up_64(bits);
}

std::vector<long> divergence_witnesses(const Omega& omega, std::size_t count, long k_max, int stride, bool odd_only) {
  const DiffeoJet R = DiffeoJet::rotation(omega, 1);
  std::vector<long> out;
  for (long n = 1; n <= k_max && out.size() < count; ++n) {
    if (odd_only && n % 2 == 0) continue;
    const Real d = R.divisor(stride * n).abs();
    if (d == 0) break;  // λ^{stride·n} = 1: ω is rational at this depth
    if (d * factorial(static_cast<unsigned long>(n)) <= 1) out.push_back(n);
  }
  return out;
}

DivergentExample siegel_divergent(const Omega& omega, const DiffeoJet& jet, int p_max, unsigned precision_bits) {
  return siegel_like(omega, jet, p_max, precision_bits, 1);
}

DivergentExample odd_siegel_divergent(const Omega& omega, const DiffeoJet& jet, int p_max, unsigned precision_bits) {
  if (!jet.odd()) throw std::invalid_argument("odd_siegel_divergent: the jet must be odd");
  return siegel_like(omega, jet, p_max, precision_bits, 2);
}

DivergentExample tau_divergent(const Omega& omega, int p_max, unsigned requested) {
  if (p_max < 1) throw std::invalid_argument("p_max must be at least 1");
  std::vector<long> ns;
  {
    PrecisionScope scan(std::max(requested, omega_bits(omega)));
    ns = divergence_witnesses(omega, static_cast<std::size_t>(p_max), static_cast<long>(kFactorialBudget), 1, true);
  }
  DivergentExample out;
  if (ns.empty()) throw GuardError("no odd super-Liouville witness below the factorial budget");
  if (static_cast<int>(ns.size()) < p_max)
    out.stopped = "only " + std::to_string(ns.size()) + " odd witness(es) below the factorial budget";
  const int order = static_cast<int>(ns.back()) + 2;
  out.precision_bits = example_precision(omega, order, requested);
  require_memory(order, out.precision_bits);
  PrecisionScope scope(out.precision_bits);
  const DiffeoJet F0 = DiffeoJet::rotation(omega, order);
  DiffeoJet F(F0.omega(), BiSeries(order), false);
  const Complex lam = F.lambda();
  AdmissibleStepper st(F, DiagonalRule::resonant(UniSeries(order / 2, true)), order);
  for (std::size_t p = 0; p < ns.size(); ++p) {
    const int e = static_cast<int>(ns[p]);
    while (st.next_degree() < e + 2) st.advance();
    // I_p: τ_{e+1} with F_{1,e} = F_{e+1,0} = 0
    BiSeries trial = st.L().truncated(e + 2);
    const auto& pv = st.preview();
    for (int s = 0; s <= e + 2; ++s) trial.at(e + 2 - s, s) = pv.L[static_cast<std::size_t>(s)];
    const Real I = tau_via_recursion(trial).tau[e + 1].re;
    const Complex xi = -F.divisor(e);  // λ^{n_p} − 1
    const Real v = xi.im >= 0 ? Real(1) : Real(-1);
    const Real u = lam.re * I >= 0 ? v : Real(-v);
    st.set_map_coeff(1, e, Complex(Real(0), -u));
    st.set_map_coeff(e + 1, 0, Complex(Real(0), u));
    st.advance();
    Witness w;
    w.p = static_cast<int>(p) + 1;
    w.n = ns[p];
    w.coefficient = "tau_" + std::to_string(e + 1);
    w.value = abs(tau_via_recursion(st.L().truncated(e + 2)).tau[e + 1].re);
    w.bound = cos_bound(lam, ns[p]);
    w.holds = w.value >= w.bound;
    out.witnesses.push_back(std::move(w));
  }
  st.run();
  out.order = order;
  out.F = st.map();
  out.residual = conjugacy_residual(st.map(), st.L(), st.Gamma());
  return out;
}

DiffeoJet classic_map(const Omega& omega, ClassicKind kind, int d, int order) {
  if (order < 2) throw std::invalid_argument("classic_map: order must be at least 2");
  const Complex lam = DiffeoJet::rotation(omega, 1).lambda();
  BiSeries nl(order);
  switch (kind) {
    case ClassicKind::yoccoz_quadratic:
      nl.at(2, 0) = -lam;
      break;
    case ClassicKind::geyer: {
      if (d < 1) throw std::invalid_argument("geyer: d must be at least 1");
      // λ Σ_k binom(d,k) z^{k+1} / d^k
      Real c(1);
      for (int k = 1; k <= d && k + 1 <= order; ++k) {
        c = c * (d - k + 1) / (Real(k) * d);
        nl.at(k + 1, 0) = c * lam;
      }
      break;
    }
    case ClassicKind::corge:
      if (d < 1) throw std::invalid_argument("corge: d must be at least 1");
      if (d + 1 <= order) nl.at(d + 1, 0) = lam;
      break;
    case ClassicKind::exp: {
      Real c(1);
      for (int k = 1; k + 1 <= order; ++k) {
        c /= k;
        nl.at(k + 1, 0) = c * lam;
      }
      break;
    }
  }
  return DiffeoJet(omega, nl, false);
}

ClassicKind parse_classic_kind(const std::string& s) {
  if (s == "yoccoz" || s == "yoccoz_quadratic" || s == "quadratic") return ClassicKind::yoccoz_quadratic;
  if (s == "geyer") return ClassicKind::geyer;
  if (s == "corge") return ClassicKind::corge;
  if (s == "exp") return ClassicKind::exp;
  throw std::invalid_argument("unknown classic map kind: " + s + " (yoccoz, geyer, corge, exp)");
}

Real covering_identity_check(const Omega& omega, int d, int order) {
  if (d < 1) throw std::invalid_argument("covering_identity_check: d must be at least 1");
  const Complex lam = DiffeoJet::rotation(omega, 1).lambda();
  // e^{2πi dω} from dω mod 1, independently of λ^d
  Complex mu;
  {
    PrecisionScope guard(std::max(working_bits() + 64, omega_bits(omega)));
    Real x = omega.value * d;
    x -= floor(x);
    mu = expi2pi(x);
  }
  mu = at_working(mu);
  UniSeries f(order);
  f[1] = lam;
  if (d + 1 <= order) f[d + 1] = lam * Complex(Real(1) / d);
  UniSeries lhs = UniSeries::monomial(order, 0, Complex(1));
  for (int i = 0; i < d; ++i) lhs = mul(lhs, f);
  UniSeries P(order);  // μZ(1+Z/d)^d
  Real c(1);
  for (int k = 0; k <= d && k + 1 <= order; ++k) {
    if (k > 0) c = c * (d - k + 1) / (Real(k) * d);
    P[k + 1] = mu * Complex(c);
  }
  const UniSeries rho = UniSeries::monomial(order, d, Complex(1));
  return (lhs - compose(P, rho)).max_abs();
}

}  // namespace geonf
