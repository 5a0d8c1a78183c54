#pragma once

#include "geonf/admissible.hpp"

namespace geonf {

// τ(z) = −z + O(z²) with real coefficients
struct Involution {
  UniSeries tau;
  Real residual;  // ‖τ∘τ − Id‖_∞
};

Real involution_defect(const UniSeries& tau);

// z·|Λ_2|^{1/2}·√(Λ/(Λ_2 z²)) for a real Λ = Λ_2 z² + O(z³), Λ_2 > 0; order Λ.order() − 1
UniSeries square_root_chart(const UniSeries& Lambda);

// τ = ℓ⁻¹∘(−Id)∘ℓ, order N−1
Involution tau_via_ell(const BiSeries& L);
// the explicit recursion 2τ*_{n−1} = [Λ*(−z) − Λ*(z) + τ*² + Σ_{r≥1} Λ*^{(r)}(−z) τ*^r / r!]_n
// for Λ = z² + Λ*, τ = −z + τ*; order Λ.order() − 1
Involution tau_via_recursion(const UniSeries& Lambda);
Involution tau_via_recursion(const BiSeries& L);

struct Balanced {
  AdmissiblePair pair;       // (L_F, Γ_F)
  Involution tau;            // τ_F
  UniSeries g;               // L_F = g∘L for the resonant-free seed L
  Real identity_residual;    // ‖L_F(z,z) + z τ_F(z)‖_∞
  Real odd_residual;         // odd part of h∘ℓ⁻¹
};
// The balanced series L_F, characterized by L_F(z,z) = −z τ_F(z).  Throws CheckError if h∘ℓ⁻¹ is not even.
Balanced balanced(const DiffeoJet& F, int order, const Real& tol);

// τ_{F,𝒞} = ℓ_𝒞⁻¹∘σ∘ℓ_𝒞 with ℓ_𝒞² = L(c(u), c̄(u)); order L.order() − 1
Involution tau_along_curve(const BiSeries& L, const UniSeries& c);

struct CurveMatch {
  UniSeries c;  // c(u) = u + O(u²), real coefficients
  Real residual;
};
// c with L′(u,u) = L(c(u), c̄(u)); the free direction at each step is fixed by taking c_{n−1} real.
CurveMatch solve_curve_match(const BiSeries& L, const BiSeries& Lp);

}  // namespace geonf
