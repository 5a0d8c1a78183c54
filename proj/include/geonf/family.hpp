#pragma once

#include "geonf/diffeo.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace geonf {

// Series-valued maps of F_t = (1−t)F0 + tF1 whose coefficients are polynomials in t of bounded degree:
//   Lstar     resonant-free L*_rs       deg ≤ r+s−2
//   tau       τ_n of the balanced pair  deg ≤ n−1
//   Lbalanced L_F,rs                    deg ≤ r+s−2
//   Gamma     Γ_F,n                     deg ≤ 2n−2
enum class IpmTarget { Lstar, tau, Lbalanced, Gamma };
IpmTarget parse_ipm_target(const std::string& s);
std::string to_string(IpmTarget t);
std::vector<IpmTarget> all_ipm_targets();

struct IpmRow {
  IpmTarget target;
  std::string coefficient;  // "L_{2,1}", "tau_3", "Gamma_2"
  int degree_bound = 0;
  Real residual;  // |interpolant − value| at the holdout node, divided by max(1, max |value|)
  bool within_bound = false;
  // set when the claimed bound fails: whether degree_bound + 1 fits instead
  std::optional<bool> fits_next;
};

struct IpmReport {
  std::vector<IpmRow> rows;
  Real max_residual;
  int solves = 0;  // distinct t at which F_t was solved
  bool all_within() const;
};

// For each target coefficient with degree bound D: solve at the D+2 Chebyshev points of [−1, 1], interpolate
// the first D+1, compare at the last.  Throws GuardError if some F_t hits the small-divisor guard.
IpmReport ipm_degree_check(const DiffeoJet& F0, const DiffeoJet& F1, int order, const std::vector<IpmTarget>& targets,
                           const Real& tol);

// Uniform double in [0, 1) from the top 53 bits, independent of the standard library's distributions.
double unit_uniform(std::mt19937_64& rng);
// F with every coefficient of degree 2..max_degree drawn with |Re|, |Im| ≤ 1/√2 (so |F_jk| ≤ 1); odd keeps
// only odd degrees.
DiffeoJet random_diffeo(const Omega& omega, int order, int max_degree, std::mt19937_64& rng, bool odd = false);

}  // namespace geonf
