#pragma once

#include "geonf/real.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace geonf {

// ω = [0; r_1, r_2, ..., r_depth] with convergents p_k/q_k, k = 0..depth.
// Convention: p_{-1} = 1, q_{-1} = 0, p_0 = 0, q_0 = 1, so q_k p_{k-1} − p_k q_{k-1} = (−1)^k.
class ContinuedFraction {
 public:
  ContinuedFraction() = default;
  explicit ContinuedFraction(std::vector<Int> quotients);
  static ContinuedFraction parse(const std::string& csv);  // "2,1,43"

  const std::vector<Int>& quotients() const { return r_; }
  std::size_t depth() const { return r_.size(); }
  const Int& r(std::size_t k) const { return r_.at(k - 1); }
  const Int& p(std::size_t k) const { return p_.at(k); }
  const Int& q(std::size_t k) const { return q_.at(k); }

  // value of the finite fraction, p_depth / q_depth, at the working precision
  Real value() const;
  // bits needed to resolve dist(q_k ω, ℤ) for every stored k
  unsigned required_bits() const;
  std::string to_string() const;

 private:
  std::vector<Int> r_, p_, q_;
};

struct Convergent {
  Int p, q;
};

// (p_k, q_k) for k = 0..depth
std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t depth);
// q_k p_{k−1} − p_k q_{k−1}
Int convergent_determinant(const ContinuedFraction& cf, std::size_t k);

// S_K = Σ_{k=1}^{K} ln(q_{k+1}) / q_k for K = 1..depth (needs depth+1 quotients)
std::vector<Real> bruno_partial_sums(const ContinuedFraction& cf, std::size_t depth);

struct LambdaDistance {
  Real distance;  // |1 − λ^n|
  Real theta;     // dist(nω, ℤ)
};
LambdaDistance lambda_power_distance(const Real& omega, long n);

struct WitnessScan {
  std::vector<long> witnesses;  // k with |λ^k − 1|⁻¹ ≥ k!
  std::vector<long> exhausted;  // k where λ^k = 1 at working precision (no verdict)
};
WitnessScan super_liouville_witnesses(const Real& omega, long k_max);
// k with |λ^{2k} − 1|⁻¹ ≥ k!, i.e. witnesses for 2ω
WitnessScan doubled_witnesses(const Real& omega, long k_max);

inline constexpr unsigned long kFactorialBudget = 5000;

// r_k = seed_k for k ≤ ell, r_k = 7·q_{k−1}! + ε_k for ell < k ≤ depth with ε_k ∈ {0,1} making q_k odd
// (ε_k = 0 when both choices do).  The postcondition dist(q_k ω, ℤ) ≤ 1/(7 q_k!) is verified exactly for
// every ell ≤ k < depth.
ContinuedFraction odd_super_liouville_construct(const std::vector<Int>& seed, std::size_t ell,
                                                std::size_t depth,
                                                unsigned long factorial_budget = kFactorialBudget);

// Exact test of dist(q_k ω, ℤ) ≤ 1/(7 q_k!) with ω = p_depth/q_depth.
bool odd_witness_holds(const ContinuedFraction& cf, std::size_t k);
// dist(q_k ω, ℤ) as the exact fraction m / q_depth; returns m
Int distance_numerator(const ContinuedFraction& cf, std::size_t k);

Int int_factorial(unsigned long n);

}  // namespace geonf
