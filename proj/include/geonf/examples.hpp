#pragma once

#include "geonf/admissible.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geonf {

// One verified instance of a divergence inequality |coefficient| ≥ 2·n!·|cos 2πω|.
struct Witness {
  int p = 0;
  long n = 0;              // witness index n_p
  std::string coefficient;  // e.g. "L_{4,1}" or "tau_4"
  Real value;              // |coefficient|
  Real bound;              // 2·n!·|cos 2πω|
  bool holds = false;
};

struct DivergentExample {
  DiffeoJet F;
  std::vector<Witness> witnesses;
  unsigned precision_bits = 0;  // precision actually used (auto-raised, see example_precision)
  int order = 0;                // solver order reached
  Real residual;                // conjugacy residual of the final admissible pair
  std::optional<std::string> stopped;  // why fewer than p_max witnesses were produced
};

// Bits needed to keep every |1 − λ^m| (1 ≤ m ≤ order) above the small-divisor guard, at least `requested`
// and the continued fraction's own requirement, rounded up to a multiple of 64.
unsigned example_precision(const Omega& omega, int order, unsigned requested);

// Indices n ≤ k_max with |1 − λ^{stride·n}|·n! ≤ 1 (stride 2: witnesses for 2ω), optionally odd n only.
std::vector<long> divergence_witnesses(const Omega& omega, std::size_t count, long k_max, int stride, bool odd_only);

// Constructions throw GuardError when their coefficient tables would exceed about 4 GB.
// Siegel-type construction: F_{1,n_p} = F_{n_p+1,0} = ±1, giving |L_{n_p+1,1}| ≥ 2·n_p!·|cos 2πω|.
// `jet` supplies F below degree n_1 + 1.
DivergentExample siegel_divergent(const Omega& omega, const DiffeoJet& jet, int p_max, unsigned precision_bits);
// F_{1,n_p} = −i u_p, F_{n_p+1,0} = i u_p, giving |τ_{n_p+1}| ≥ 2·n_p!·|cos 2πω| for odd witnesses n_p.
DivergentExample tau_divergent(const Omega& omega, int p_max, unsigned precision_bits);
// Odd maps, 2ω super-Liouville: F_{1,2n_p} = F_{2n_p+1,0} = ±1, giving |L_{2n_p+1,1}| ≥ 2·n_p!·|cos 2πω|.
DivergentExample odd_siegel_divergent(const Omega& omega, const DiffeoJet& jet, int p_max, unsigned precision_bits);

enum class ClassicKind { yoccoz_quadratic, geyer, corge, exp };
// λz(1−z), λz(1+z/d)^d, λz(1+z^d), λz·e^z
DiffeoJet classic_map(const Omega& omega, ClassicKind kind, int d, int order);
ClassicKind parse_classic_kind(const std::string& s);

// ‖ρ∘f − P_{dω,d}∘ρ‖ through order N for f = λz(1 + z^d/d), ρ = z^d, P_{μ,d}(Z) = e^{2πiμ}Z(1+Z/d)^d
Real covering_identity_check(const Omega& omega, int d, int order);

}  // namespace geonf
