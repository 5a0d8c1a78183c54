#pragma once

#include "geonf/arithmetic.hpp"
#include "geonf/series.hpp"
#include "geonf/series_io.hpp"

#include <optional>
#include <string>

namespace geonf {

// Rotation number, kept with 64 guard bits beyond the working precision (more if a continued fraction
// demands it).
struct Omega {
  Real value;
  std::optional<ContinuedFraction> cf;
  std::string text;

  // "<decimal>", "cf:a,b,c" or "golden"
  static Omega parse(const std::string& s);
  static Omega from_cf(const ContinuedFraction& cf);
  static Omega golden();
};

// |1 − λ^m| below this aborts a solve.
Real small_divisor_threshold();

// F(z, z̄) = λz + Σ_{j+k≥2} F_jk z^j z̄^k, stored as a series in (z, w) including the linear part.
class DiffeoJet {
 public:
  DiffeoJet() = default;
  // `nonlinear` must vanish in degrees < 2 (the linear part is set from ω).
  DiffeoJet(Omega omega, const BiSeries& nonlinear, bool odd = false);
  static DiffeoJet rotation(Omega omega, int order);

  const Omega& omega() const { return omega_; }
  const Complex& lambda() const { return lambda_; }
  const BiSeries& series() const { return F_; }
  int order() const { return F_.order(); }
  bool odd() const { return odd_; }
  bool holomorphic() const;

  // λ^n computed from n·ω mod 1 at guard precision (n may be negative)
  Complex lambda_power(long n) const;
  // 1 − λ^n
  Complex divisor(long n) const;

  void set_coeff(int j, int k, const Complex& c);
  DiffeoJet with_order(int order) const;

 private:
  Omega omega_;
  Complex lambda_;
  BiSeries F_;
  bool odd_ = false;
};

// Throws GuardError if |1 − λ^m| falls below the threshold for some 1 ≤ m ≤ m_max.
void check_nonresonant(const DiffeoJet& F, long m_max);

// (1−t)·F0 + t·F1 with a common ω
DiffeoJet affine_combination(const DiffeoJet& F0, const DiffeoJet& F1, const Real& t);

Json to_json(const DiffeoJet& F);
// {"omega": ..., "order": N, "coeffs": [[j,k,re,im], ...], "odd": bool}; `omega_override` wins if non-empty
DiffeoJet diffeo_from_json(const Json& j, const std::string& omega_override = "");

}  // namespace geonf
