#pragma once

#include "geonf/diffeo.hpp"
#include "geonf/rational_poly.hpp"
#include "geonf/series_io.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace geonf {

// (x, y) ↦ (m11 x + m12 y, m21 x + m22 y)
struct LinearFactor {
  Rational m11, m12, m21, m22;
  Rational det() const { return m11 * m22 - m12 * m21; }
};
// Time-one map of the Hamiltonian c·ℓ^{power+1}, ℓ = a x + b y:
// (x, y) ↦ (x + (power+1) c b ℓ^power, y − (power+1) c a ℓ^power)
struct ShearFactor {
  Rational a, b, c;
  int power;
};
using Factor = std::variant<LinearFactor, ShearFactor>;

PlanarPoly factor_map(const Factor& f);
Factor factor_inverse(const Factor& f);
int factor_degree(const Factor& f);

// Composite of polynomial factors, kept unexpanded: the full polynomial has degree ∏ deg(factor), which
// outgrows exact arithmetic after a few shears, while every jet and every point value stays cheap.
class PlanarPolyMap {
 public:
  PlanarPolyMap() = default;
  // the map becomes f∘(current map)
  void then(Factor f) { factors_.push_back(std::move(f)); }
  const std::vector<Factor>& factors() const { return factors_; }

  long degree_bound() const;
  PlanarPoly jet(int n) const;          // truncated at total degree n
  PlanarPoly inverse_jet(int n) const;  // jet of the inverse map
  // full expansion, when degree_bound() ≤ max_degree
  std::optional<PlanarPoly> expand(long max_degree = 24) const;
  // Point values over ℤ/p: exact rational evaluation is hopeless, since coefficient sizes multiply with
  // every factor's degree.
  std::pair<Int, Int> evaluate_mod(const Int& x, const Int& y, const Int& p) const;
  // det of the Jacobian at a point mod p, by the chain rule through the factors
  Int jacobian_det_mod(const Int& x, const Int& y, const Int& p) const;
  bool odd() const;

 private:
  std::vector<Factor> factors_;
};

// Jacobian determinant of one factor, as an exact polynomial
RatPoly factor_jacobian(const Factor& f);
// r mod p for a rational whose denominator is prime to p
Int rational_mod(const Rational& r, const Int& p);

PlanarPolyMap shear_map(const Rational& a, const Rational& b, const Rational& c, int d);

struct AreaCertificate {
  bool factors_unimodular = false;  // every factor's Jacobian determinant is the polynomial 1
  std::optional<bool> expanded_unimodular;  // the expanded determinant, when expansion is feasible
  int points_checked = 0;
  bool points_unimodular = false;   // chain-rule determinants at sample points, mod 2^61 − 1
  bool holds() const { return factors_unimodular && expanded_unimodular.value_or(true) && points_unimodular; }
};
AreaCertificate certify_area_preserving(const PlanarPolyMap& m);

// Exact unit-circle point ((1−t²)/(1+t²), 2t/(1+t²)) with t the dyadic rounding of tan(jπ/(2(d+1)))
std::pair<Rational, Rational> span_node(int j, int d);

struct SpanTerm {
  Rational c, a, b;  // c·(a x + b y)^d
};
// H = Σ_j c_j (a_j x + b_j y)^d over d+1 distinct directions; H homogeneous of degree d
std::vector<SpanTerm> span_decompose(const RatPoly& H, int d);
RatPoly span_reconstruct(const std::vector<SpanTerm>& terms, int d);

// Rotation by 2πω as an exact rational rotation (t = tan(πω) rounded to `bits` binary digits).
LinearFactor rational_rotation(const Real& omega, unsigned bits = 48);

struct ExtendedJet {
  PlanarPolyMap map;
  std::vector<int> shears_per_degree;  // number of shears added at stage n → n+1, starting with n = 1
};
// Polynomial area-preserving map with N-jet J.  J's linear part must have determinant 1, and at each stage
// the homogeneous remainder (g, h) must satisfy g_x + h_y = 0 exactly (CheckError names the degree otherwise).
ExtendedJet extend_jet(const PlanarPoly& J, int N, bool odd);

Json to_json(const PlanarPoly& m, int order);
PlanarPoly planar_poly_from_json(const Json& j);
Json to_json(const PlanarPolyMap& m);
Rational rational_from_json(const Json& v);

struct GeneratedMap {
  BiSeries X, Y;         // Φ^u in the real chart, order M
  DiffeoJet F;           // R_ω∘Φ^u
  Real jacobian_residual;  // ‖det DΦ^u − 1‖ through degree M−1
  int iterations;
};
// u(x, y′) of order M+1 without terms of degree < 3; solves x′ = x + u_{y′}(x,y′), y = y′ + u_x(x,y′)
// for (x′, y′) as series in (x, y) by fixed-point iteration.
GeneratedMap generating_map(const BiSeries& u, const Omega& omega);

}  // namespace geonf
