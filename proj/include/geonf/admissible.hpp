#pragma once

#include "geonf/diffeo.hpp"
#include "geonf/series.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace geonf {

// Residual tolerance used when none is given: 1e-30 at 256 bits, scaling with the precision.
Real default_tolerance();

// L ∈ 𝓛, Γ ∈ 𝓖 (a series in R = zw of order ⌊N/2⌋) with L∘F̂ = Γ∘L through degree N.
struct AdmissiblePair {
  BiSeries L;
  UniSeries Gamma;
  Real residual;
};

// How the undetermined diagonal coefficients L_nn are fixed at each even degree 2n.
struct DiagonalRule {
  enum class Kind { resonant_part, chi } kind = Kind::resonant_part;
  UniSeries target;  // ρ (ρ_1 ignored) or χ (χ_1 = 1); missing coefficients count as zero

  static DiagonalRule resonant(UniSeries rho) { return {Kind::resonant_part, std::move(rho)}; }
  static DiagonalRule chi(UniSeries chi) { return {Kind::chi, std::move(chi)}; }
};

// Degree-by-degree solver of L∘F̂ = Γ∘L.  At degree m the degree-m part of L∘F̂ − Γ∘L computed from the
// already fixed lower-degree data is A; then (1−λ^{r−s}) L_rs = A_rs for r ≠ s and Γ_{m/2} = A_nn.
// The map's coefficients of degree ≥ m−1 may still be changed before degree m is committed.
class AdmissibleStepper {
 public:
  struct Preview {
    int degree = 0;
    std::vector<Complex> A;  // indexed by the w-exponent s, r = degree − s
    std::vector<Complex> L;
    std::optional<Complex> gamma;  // Γ_{degree/2} for even degree
  };

  AdmissibleStepper(const DiffeoJet& F, DiagonalRule rule, int order);

  int order() const { return order_; }
  int next_degree() const { return m_; }
  bool done() const { return m_ > order_; }

  const Preview& preview();
  void advance();
  void run();

  // F_jk := c; only allowed for j+k ≥ next_degree()−1 (lower coefficients are already used).
  void set_map_coeff(int j, int k, const Complex& c);

  const DiffeoJet& map() const { return F_; }
  const BiSeries& L() const { return L_; }        // committed through next_degree()−1
  const UniSeries& Gamma() const { return Gamma_; }
  AdmissiblePair result(bool verify = true) const;

 private:
  using Part = std::vector<std::pair<int, Complex>>;  // sparse homogeneous part: (w-exponent, coeff)
  using Graded = std::vector<Part>;                   // indexed by degree
  using DensePart = std::vector<Complex>;             // empty = zero

  void rebuild_map_tables();
  void absorb_into_T(int j, int k);
  void compute_powers_of_L(int m);

  DiffeoJet F_;
  DiagonalRule rule_;
  int order_;
  int m_ = 3;
  BiSeries L_;
  UniSeries Gamma_;
  std::vector<Complex> div_;  // 1 − λ^{n}, index n + order
  std::vector<Graded> P_, Q_;  // powers of F and F̃
  std::vector<std::vector<DensePart>> T_;  // T_j = Σ_k L_jk Q_k
  std::vector<std::vector<Part>> Lpow_;   // [L^n]_e
  std::optional<Preview> preview_;
};

AdmissiblePair solve_admissible(const DiffeoJet& F, const UniSeries& rho, int order, bool verify = true);
AdmissiblePair solve_admissible_chi(const DiffeoJet& F, const UniSeries& chi, int order, bool verify = true);
AdmissiblePair resonant_free(const DiffeoJet& F, int order, bool verify = true);

// ‖L∘F̂ − Γ∘L‖_∞ through degree L.order(), by direct composition.
Real conjugacy_residual(const DiffeoJet& F, const BiSeries& L, const UniSeries& Gamma);

// Σ_{n≥2} L_nn R^n
UniSeries resonant_part(const BiSeries& L);
// χ_L(z²) = ½(L(z,z) + L(−z,−z)), as a series in R
UniSeries chi_of(const BiSeries& L);

// ℓ = z·√(L(z,z)/z²), order N−1 (ℓ_N would need degree N+1 of L)
UniSeries ell_of(const BiSeries& L);

struct GammaFromL {
  UniSeries Gamma;
  Real odd_residual;
};
// Γ(z²) = L∘F̂(ℓ⁻¹(z), ℓ⁻¹(z)); throws CheckError when the right-hand side is not even within tol.
GammaFromL gamma_of(const BiSeries& L, const DiffeoJet& F, const Real& tol);

// (g∘L, g∘Γ∘g⁻¹) with the residual re-verified
AdmissiblePair group_act(const UniSeries& g, const AdmissiblePair& pair, const DiffeoJet& F);
// g ∈ 𝓖 with ρ_{g∘L1} = ρ_{L2}, solved degree by degree on the diagonal
UniSeries orbit_element(const BiSeries& L1, const BiSeries& L2);

}  // namespace geonf
