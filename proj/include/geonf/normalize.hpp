#pragma once

#include "geonf/admissible.hpp"

namespace geonf {

// Tangent-to-identity Φ with |Φ|² = ν∘Φ = L, from the Morse splitting L = x²A + 2xyB + y²C in the real
// chart.  Φ is determined through degree N−1 (which fixes |Φ|² through degree N); the degree-N part is zero.
BiSeries morse_phi(const BiSeries& L);

struct NormalForm {
  BiSeries G;               // Φ∘F∘Φ⁻¹ through degree N−1
  BiSeries modulus;         // |G|² through degree N
  Real offdiag_residual;    // max |[|G|²]_rs|, r ≠ s
};
NormalForm geometric_normal_form(const DiffeoJet& F, const BiSeries& phi, int order);

struct Polar {
  UniSeries f;      // Γ(R) = R(1+f(R))²
  BiSeries beta;    // Hermitian, G = λz(1+f(zw))e^{2πiβ}
  Real radial_residual;          // non-radial part of |G/(λz)|
  Real reconstruction_residual;  // ‖λz(1+f)e^{2πiβ} − G‖
};
// Throws CheckError when |G|² is not a function of |ζ|² within tol.
Polar polar_decompose(const DiffeoJet& F, const BiSeries& G, const Real& tol);

struct Conservativity {
  bool conservative;
  UniSeries Gamma;
  Real deviation;  // ‖Γ − Id‖_∞
};
Conservativity is_formally_conservative(const DiffeoJet& F, int order, const Real& tol);

struct Linearization {
  UniSeries h;                 // h∘F = λh, h = z + O(z²)
  BiSeries L;                  // h(z)·h*(w), admissible with Γ = Id
  Real residual;               // ‖h∘F − λh‖
  Real admissible_residual;    // ‖L∘F̂ − L‖
};
Linearization linearize_holomorphic(const DiffeoJet& F, int order);

}  // namespace geonf
