#include "geonf/family.hpp"

#include "geonf/admissible.hpp"
#include "geonf/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace geonf {

IpmTarget parse_ipm_target(const std::string& s) {
  if (s == "Lstar" || s == "lstar") return IpmTarget::Lstar;
  if (s == "tau") return IpmTarget::tau;
  if (s == "Lbalanced" || s == "lbalanced") return IpmTarget::Lbalanced;
  if (s == "Gamma" || s == "gamma") return IpmTarget::Gamma;
  throw std::invalid_argument("unknown ipm target: " + s + " (Lstar, tau, Lbalanced, Gamma)");
}

std::string to_string(IpmTarget t) {
  switch (t) {
    case IpmTarget::Lstar: return "Lstar";
    case IpmTarget::tau: return "tau";
    case IpmTarget::Lbalanced: return "Lbalanced";
    case IpmTarget::Gamma: return "Gamma";
  }
  return "?";
}

std::vector<IpmTarget> all_ipm_targets() {
  return {IpmTarget::Lstar, IpmTarget::tau, IpmTarget::Lbalanced, IpmTarget::Gamma};
}

bool IpmReport::all_within() const {
  return std::all_of(rows.begin(), rows.end(), [](const IpmRow& r) { return r.within_bound; });
}

namespace {

struct Sample {
  std::optional<BiSeries> Lstar;
  std::optional<Balanced> bal;
};

// Chebyshev points cos((2i+1)π/(2M)), i = 0..M−1
std::vector<Real> chebyshev(int M) {
  std::vector<Real> t;
  for (int i = 0; i < M; ++i) t.push_back(cos(pi() * (2 * i + 1) / (2 * M)));
  return t;
}

// Barycentric value at x of the interpolant through (t_i, f_i)
Complex interpolate(const std::vector<Real>& t, const std::vector<Complex>& f, const Real& x) {
  Complex num, den;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Real w(1);
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != i) w *= t[i] - t[j];
    const Real c = 1 / (w * (x - t[i]));
    num += c * f[i];
    den += Complex(c);
  }
  return num / den;
}

class Sampler {
 public:
  Sampler(const DiffeoJet& F0, const DiffeoJet& F1, int order, bool need_star, bool need_bal, const Real& tol)
      : F0_(F0.with_order(order)), F1_(F1.with_order(order)), order_(order), star_(need_star), bal_(need_bal),
        tol_(tol) {}

  const Sample& at(int M, int i) {
    auto [it, fresh] = cache_.try_emplace({M, i});
    if (fresh) {
      const DiffeoJet F = affine_combination(F0_, F1_, chebyshev(M)[static_cast<std::size_t>(i)]);
      if (star_) it->second.Lstar = resonant_free(F, order_, false).L;
      if (bal_) it->second.bal = balanced(F, order_, tol_);
    }
    return it->second;
  }
  int solves() const { return static_cast<int>(cache_.size()); }

 private:
  DiffeoJet F0_, F1_;
  int order_;
  bool star_, bal_;
  Real tol_;
  std::map<std::pair<int, int>, Sample> cache_;
};

using Extract = std::function<Complex(const Sample&)>;

// residual of the degree-D fit: D+2 nodes, the last one held out
Real holdout_residual(Sampler& s, const Extract& get, int D) {
  const int M = D + 2;
  const std::vector<Real> t = chebyshev(M);
  std::vector<Complex> f;
  Real scale(1);
  for (int i = 0; i < M; ++i) {
    f.push_back(get(s.at(M, i)));
    scale = std::max(scale, f.back().abs());
  }
  const Complex extra = f.back();
  f.pop_back();
  std::vector<Real> fit(t.begin(), t.end() - 1);
  return (interpolate(fit, f, t.back()) - extra).abs() / scale;
}

}  // namespace

IpmReport ipm_degree_check(const DiffeoJet& F0, const DiffeoJet& F1, int order, const std::vector<IpmTarget>& targets,
                           const Real& tol) {
  if (order < 3) throw std::invalid_argument("ipm_degree_check: order must be at least 3");
  if (F0.omega().value != F1.omega().value)
    throw std::invalid_argument("ipm_degree_check: F0 and F1 must share ω");
  const auto has = [&](IpmTarget x) { return std::find(targets.begin(), targets.end(), x) != targets.end(); };
  Sampler sampler(F0, F1, order, has(IpmTarget::Lstar),
                  has(IpmTarget::tau) || has(IpmTarget::Lbalanced) || has(IpmTarget::Gamma), tol);

  IpmReport rep;
  rep.max_residual = 0;
  const auto check = [&](IpmTarget target, std::string name, int D, const Extract& get) {
    IpmRow row{target, std::move(name), D, holdout_residual(sampler, get, D), false, std::nullopt};
    row.within_bound = row.residual <= tol;
    if (!row.within_bound) row.fits_next = holdout_residual(sampler, get, D + 1) <= tol;
    rep.max_residual = std::max(rep.max_residual, row.residual);
    rep.rows.push_back(std::move(row));
  };
  const auto bi_rows = [&](IpmTarget target, std::function<const BiSeries&(const Sample&)> series) {
    for (int d = 3; d <= order; ++d)
      for (int s = 0; s <= d; ++s) {
        const int r = d - s;
        check(target, "L_{" + std::to_string(r) + "," + std::to_string(s) + "}", d - 2,
              [=](const Sample& x) { return series(x).at(r, s); });
      }
  };

  for (IpmTarget target : targets) switch (target) {
      case IpmTarget::Lstar:
        bi_rows(target, [](const Sample& x) -> const BiSeries& { return *x.Lstar; });
        break;
      case IpmTarget::Lbalanced:
        bi_rows(target, [](const Sample& x) -> const BiSeries& { return x.bal->pair.L; });
        break;
      case IpmTarget::tau:
        for (int n = 2; n <= order - 1; ++n)
          check(target, "tau_" + std::to_string(n), n - 1, [n](const Sample& x) { return x.bal->tau.tau[n]; });
        break;
      case IpmTarget::Gamma:
        for (int n = 2; 2 * n <= order; ++n)
          check(target, "Gamma_" + std::to_string(n), 2 * n - 2,
                [n](const Sample& x) { return x.bal->pair.Gamma[n]; });
        break;
    }
  rep.solves = sampler.solves();
  return rep;
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

DiffeoJet random_diffeo(const Omega& omega, int order, int max_degree, std::mt19937_64& rng, bool odd) {
  BiSeries nl(order);
  const double r = 1 / std::sqrt(2.0);
  for (int d = 2; d <= std::min(order, max_degree); ++d) {
    if (odd && d % 2 == 0) continue;
    for (int k = 0; k <= d; ++k) {
      const double re = (2 * unit_uniform(rng) - 1) * r;
      const double im = (2 * unit_uniform(rng) - 1) * r;
      nl.at(d - k, k) = Complex(re, im);
    }
  }
  return DiffeoJet(omega, nl, odd);
}

}  // namespace geonf
