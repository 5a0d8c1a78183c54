#pragma once

#include "geonf/series.hpp"

namespace geonf {

// For τ(x) = −x + O(x²): U = (Id−τ)/2, V = (Id+τ)/2, E = V∘U⁻¹, with U⁻¹ = Id + E.
struct Conjugator {
  UniSeries U, V, E;
  Real involution_residual;  // ‖τ∘τ − Id‖
  Real conjugacy_residual;   // ‖U⁻¹∘σ∘U − τ‖
  Real even_residual;        // odd part of E
  Real fixed_residual;       // ‖V∘τ − V‖
  Real inverse_residual;     // ‖U⁻¹ − (Id + E)‖
};
// Throws CheckError when τ is not an involution within tol.
Conjugator conjugator_of(const UniSeries& tau, const Real& tol);

struct Conjugacy {
  UniSeries psi;     // (Id + E_τ′)∘γ∘(Id + E_τ)⁻¹
  Real residual;     // ‖ψ∘τ∘ψ⁻¹ − τ′‖
};
// γ must be odd and tangent to the identity.
Conjugacy conjugators_between(const UniSeries& tau, const UniSeries& tau_p, const UniSeries& gamma, const Real& tol);

UniSeries reflect(const UniSeries& a);  // a(−x)
Real odd_part_max(const UniSeries& a);
Real even_part_max(const UniSeries& a);

}  // namespace geonf
