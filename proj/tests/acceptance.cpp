// Acceptance run: one PASS/FAIL line per criterion.  Usage: acceptance [--slow] [--only N]
#include "geonf/admissible.hpp"
#include "geonf/areapreserving.hpp"
#include "geonf/arithmetic.hpp"
#include "geonf/errors.hpp"
#include "geonf/examples.hpp"
#include "geonf/family.hpp"
#include "geonf/foliation.hpp"
#include "geonf/involutions.hpp"
#include "geonf/normalize.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace geonf;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << ']';
    }
  }
};

std::string sci(const Real& x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x.convert_to<double>();
  return s.str();
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const Real& tol25() {
  static const Real t("1e-25");
  return t;
}

std::vector<DiffeoJet> sample(int count, int order, int max_degree, bool odd, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<DiffeoJet> out;
  for (int i = 0; i < count; ++i) out.push_back(random_diffeo(Omega::golden(), order, max_degree, rng, odd));
  return out;
}

const std::vector<DiffeoJet>& main_sample() {
  static const std::vector<DiffeoJet> s = sample(20, 12, 4, false, 1);
  return s;
}

BiSeries reflected(const BiSeries& L) {
  BiSeries r = L;
  for (int d = 1; d <= L.order(); d += 2)
    for (int k = 0; k <= d; ++k) r.at(d - k, k) = -L.at(d - k, k);
  return r;
}

// ‖diagonal(L) + z·τ‖ through the order of τ plus one
Real balanced_identity(const BiSeries& L, const UniSeries& tau) {
  const UniSeries diag = diagonal(L);
  Real m(0);
  for (int n = 2; n <= tau.order() + 1 && n <= diag.order(); ++n)
    m = std::max(m, (diag[n] + tau[n - 1]).abs());
  return m;
}

Verdict criterion1() {
  Verdict v;
  const auto t0 = Clock::now();
  Real worst(0);
  for (const DiffeoJet& F : main_sample()) {
    const AdmissiblePair P = resonant_free(F, 12);
    const Balanced B = balanced(F, 12, default_tolerance());
    worst = std::max({worst, conjugacy_residual(F, P.L, P.Gamma), conjugacy_residual(F, B.pair.L, B.pair.Gamma)});
  }
  const double secs = seconds_since(t0);
  v.detail << "20 maps, N = 12: max residual " << sci(worst) << ", " << secs << " s";
  v.require(worst <= tol25(), "residual above 1e-25");
  v.require(secs <= 10, "runtime above 10 s");
  return v;
}

Verdict criterion2() {
  Verdict v;
  Real round_trip(0), orbit(0);
  for (const DiffeoJet& F : main_sample()) {
    const AdmissiblePair P = resonant_free(F, 12);
    const Balanced B = balanced(F, 12, default_tolerance());
    const AdmissiblePair again = solve_admissible(F, resonant_part(B.pair.L), 12);
    round_trip = std::max(round_trip, (again.L - B.pair.L).max_abs());
    const UniSeries g = orbit_element(P.L, B.pair.L);
    orbit = std::max(orbit, (compose(g, P.L) - B.pair.L).max_abs());
  }
  v.detail << "ρ round trip " << sci(round_trip) << ", orbit identity " << sci(orbit);
  v.require(round_trip <= tol25() && orbit <= tol25(), "above 1e-25");
  return v;
}

Verdict criterion3() {
  Verdict v;
  Real paths(0), invol(0);
  for (const DiffeoJet& F : main_sample()) {
    const BiSeries L = resonant_free(F, 12).L;
    const Involution a = tau_via_ell(L), b = tau_via_recursion(L);
    paths = std::max(paths, (a.tau - b.tau).max_abs());
    invol = std::max({invol, involution_defect(a.tau), involution_defect(b.tau)});
  }
  v.detail << "ℓ vs recursion " << sci(paths) << ", τ∘τ − Id " << sci(invol);
  v.require(paths <= tol25() && invol <= tol25(), "above 1e-25");
  return v;
}

Verdict criterion4() {
  Verdict v;
  Real ident(0);
  for (const DiffeoJet& F : main_sample()) {
    const Balanced B = balanced(F, 12, default_tolerance());
    ident = std::max(ident, balanced_identity(B.pair.L, B.tau.tau));
  }
  Real odd_tau(0), odd_sym(0);
  for (const DiffeoJet& F : sample(10, 12, 5, true, 2)) {
    const Balanced B = balanced(F, 12, default_tolerance());
    UniSeries t = B.tau.tau;
    t[1] += Complex(1);
    odd_tau = std::max(odd_tau, t.max_abs());
    odd_sym = std::max(odd_sym, (reflected(B.pair.L) - B.pair.L).max_abs());
  }
  v.detail << "L_F(z,z) + zτ_F " << sci(ident) << "; odd maps: τ_F + z " << sci(odd_tau) << ", L_F(−z,−w) − L_F "
           << sci(odd_sym);
  v.require(ident <= tol25(), "balanced identity above 1e-25");
  v.require(odd_tau <= Real("1e-30") && odd_sym <= Real("1e-30"), "odd case above 1e-30");
  return v;
}

Verdict criterion5() {
  Verdict v;
  Real morse(0), offdiag(0);
  for (const DiffeoJet& F : main_sample()) {
    const DiffeoJet F10 = F.with_order(10);
    const Balanced B = balanced(F10, 10, default_tolerance());
    const BiSeries phi = morse_phi(B.pair.L);
    morse = std::max(morse, (square_modulus(phi) - B.pair.L).max_abs());
    offdiag = std::max(offdiag, geometric_normal_form(F10, phi, 10).offdiag_residual);
  }
  v.detail << "|Φ|² − L_F " << sci(morse) << ", off-diagonal |G|² " << sci(offdiag);
  v.require(morse <= tol25(), "Morse chart above 1e-25");
  v.require(offdiag <= Real("1e-20"), "normal form above 1e-20");
  return v;
}

Verdict criterion6() {
  Verdict v;
  const Omega om = Omega::golden();
  Real dev(0), lin(0), cover(0);
  for (const auto& [kind, d] : {std::pair{ClassicKind::yoccoz_quadratic, 1}, std::pair{ClassicKind::corge, 2},
                                std::pair{ClassicKind::corge, 3}}) {
    const DiffeoJet F = classic_map(om, kind, d, 12);
    dev = std::max(dev, is_formally_conservative(F, 12, default_tolerance()).deviation);
    lin = std::max(lin, linearize_holomorphic(F, 12).residual);
  }
  for (int d : {2, 3}) cover = std::max(cover, covering_identity_check(om, d, 8));
  v.detail << "Γ − Id " << sci(dev) << ", h∘F − λh " << sci(lin) << ", covering " << sci(cover);
  v.require(dev <= tol25() && lin <= tol25() && cover <= tol25(), "above 1e-25");
  return v;
}

void report_example(Verdict& v, const char* name, const DivergentExample& ex, const std::string& coefficient,
                    double secs, double budget) {
  v.detail << name << ":";
  for (const Witness& w : ex.witnesses)
    v.detail << " p=" << w.p << " |" << w.coefficient << "| = " << sci(w.value) << " ≥ " << sci(w.bound);
  v.detail << " (" << ex.precision_bits << " bits, " << secs << " s); ";
  v.require(!ex.witnesses.empty() && ex.witnesses.front().coefficient == coefficient && ex.witnesses.front().n == 3,
            std::string(name) + " first witness is not " + coefficient);
  for (const Witness& w : ex.witnesses) v.require(w.holds, std::string(name) + " inequality");
  v.require(secs <= budget, std::string(name) + " runtime");
}

Verdict criterion7(bool slow) {
  Verdict v;
  // depth 3 makes ω = p_3/q_3, so the second witness q_3 needs one more quotient
  const Omega omega = Omega::from_cf(odd_super_liouville_construct({Int(2), Int(1)}, 2, slow ? 4 : 3));
  const DiffeoJet jet = DiffeoJet::rotation(omega, 2);
  v.detail << "q_2 = " << omega.cf->q(2) << ", q_3 = " << omega.cf->q(3) << "; ";
  const int p = slow ? 2 : 1;
  const double budget = slow ? 600 : 5;
  const auto timed = [](auto&& run) {
    const auto t0 = Clock::now();
    DivergentExample ex = run();
    return std::pair{std::move(ex), seconds_since(t0)};
  };
  {
    const auto [ex, secs] = timed([&] { return siegel_divergent(omega, jet, p, 256); });
    report_example(v, "Siegel", ex, "L_{4,1}", secs, budget);
  }
  {
    const auto [ex, secs] = timed([&] { return tau_divergent(omega, p, 256); });
    report_example(v, "tau", ex, "tau_4", secs, budget);
  }
  if (!slow) {
    const auto [ex, secs] = timed([&] { return odd_siegel_divergent(omega, jet, 1, 256); });
    report_example(v, "odd", ex, "L_{7,1}", secs, budget);
  } else {
    try {
      const auto [ex, secs] = timed([&] { return odd_siegel_divergent(omega, jet, 2, 256); });
      report_example(v, "odd", ex, "L_{7,1}", secs, budget);
    } catch (const GuardError& e) {
      v.detail << "odd p=2 not run: " << e.what();
    }
  }
  return v;
}

Verdict criterion8() {
  Verdict v;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(8);
  Real worst(0);
  std::size_t rows = 0;
  for (int i = 0; i < 10; ++i) {
    const DiffeoJet F0 = random_diffeo(Omega::golden(), 8, 4, rng), F1 = random_diffeo(Omega::golden(), 8, 4, rng);
    const IpmReport r = ipm_degree_check(F0, F1, 8, all_ipm_targets(), Real("1e-20"));
    worst = std::max(worst, r.max_residual);
    rows += r.rows.size();
    v.require(r.all_within(), "family " + std::to_string(i) + " exceeds a degree bound");
  }
  const double secs = seconds_since(t0);
  v.detail << "10 families, " << rows << " coefficients: max holdout residual " << sci(worst) << ", " << secs << " s";
  v.require(worst <= Real("1e-20"), "residual above 1e-20");
  v.require(secs <= 60, "runtime above 60 s");
  return v;
}

Verdict criterion9() {
  Verdict v;
  std::mt19937_64 rng(9);
  Real worst(0);
  for (int i = 0; i < 10; ++i) {
    UniSeries h = UniSeries::identity(12);
    for (int n = 2; n <= 12; ++n) h[n] = Complex(2 * unit_uniform(rng) - 1);
    h.set_real(true);
    const UniSeries tau = compose(invert(h), Complex(-1) * h);
    const Conjugator c = conjugator_of(tau, Real("1e-30"));
    worst = std::max({worst, c.conjugacy_residual, c.even_residual, c.fixed_residual});
  }
  v.detail << "10 involutions of order 12: max of U⁻¹σU − τ, odd part of E, V∘τ − V = " << sci(worst);
  v.require(worst <= Real("1e-30"), "above 1e-30");
  return v;
}

Verdict criterion10() {
  Verdict v;
  std::mt19937_64 rng(10);
  const auto rat = [&](int num, int den) {
    return Rational(static_cast<long>(unit_uniform(rng) * (2 * num + 1)) - num, 1 + static_cast<long>(unit_uniform(rng) * den));
  };
  const RatPoly one = RatPoly::constant(1);
  int shears = 0, jets = 0;
  for (int i = 0; i < 10; ++i) {
    const PlanarPolyMap m = shear_map(rat(4, 4), rat(4, 4), rat(3, 3), 1 + i % 4);
    const auto full = m.expand();
    v.require(full && jacobian_determinant(*full) == one, "shear Jacobian");
    ++shears;
  }
  for (int N = 1; N <= 4; ++N)
    for (bool odd : {false, true}) {
      PlanarPolyMap src;
      src.then(rational_rotation(Omega::golden().value));
      for (int k = 0; k < 3; ++k) src.then(ShearFactor{rat(3, 3), rat(3, 3), rat(2, 2), odd ? 3 : 1 + k});
      const PlanarPoly J = src.jet(N);
      const ExtendedJet E = extend_jet(J, N, odd);
      v.require(E.map.jet(N) == J, "jet not reproduced at N = " + std::to_string(N));
      const AreaCertificate cert = certify_area_preserving(E.map);
      v.require(cert.factors_unimodular, "factor Jacobian");
      const auto full = E.map.expand();
      v.require(!full || jacobian_determinant(*full) == one, "expanded Jacobian");
      if (odd) v.require(E.map.odd(), "odd extension has even terms");
      ++jets;
    }
  v.detail << shears << " shear maps and " << jets << " extended jets (N ≤ 4, odd and general): exact det 1";
  return v;
}

Rational exact_distance(const Int& q, const Int& P, const Int& Q) {
  Int m = (q * P) % Q;
  if (2 * m > Q) m = Q - m;
  return Rational(m, Q);
}

Verdict criterion11() {
  Verdict v;
  std::mt19937_64 rng(11);
  int identities = 0;
  for (int i = 0; i < 20; ++i) {
    std::vector<Int> r;
    for (int k = 0; k < 20; ++k) r.emplace_back(1 + static_cast<long>(unit_uniform(rng) * 1000));
    const ContinuedFraction cf(r);
    for (std::size_t k = 0; k <= cf.depth(); ++k, ++identities)
      v.require(convergent_determinant(cf, k) == ((k % 2 == 0) ? 1 : -1), "determinant identity");
  }
  const ContinuedFraction cf = odd_super_liouville_construct({Int(2), Int(1)}, 2, 3);
  v.detail << identities << " determinant identities exact; ";
  for (std::size_t k = 1; k <= 3; ++k) {
    if (cf.q(k) % 2 == 0) continue;
    const Rational d = exact_distance(cf.q(k), cf.p(cf.depth()), cf.q(cf.depth()));
    Int fact = 1;
    for (Int j = 2; j <= cf.q(k); ++j) fact *= j;
    const Rational bound(Int(1), 7 * fact);
    v.detail << "q_" << k << " = " << cf.q(k) << (d <= bound ? " meets" : " misses") << " 1/(7 q!); ";
    v.require(d <= bound, "witness bound at k = " + std::to_string(k));
  }
  const auto S = bruno_partial_sums(ContinuedFraction(std::vector<Int>(11, Int(1))), 10);
  v.detail << "golden S_10 = " << S.back().convert_to<double>();
  v.require(S.back() <= 3, "golden Bruno partial sum S_10 exceeds 3");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--slow") {
      slow = true;
    } else if (a == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--slow] [--only N]\n";
      return 1;
    }
  }
  PrecisionScope precision(256);
  const std::vector<std::function<Verdict()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5, criterion6,
      [slow] { return criterion7(slow); }, criterion8, criterion9, criterion10, criterion11};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && only != id) continue;
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " [exception: " << e.what() << ']';
    }
    if (!v.pass) ++failures;
    std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << " — " << v.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
