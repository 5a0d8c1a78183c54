#include <doctest.h>

#include "geonf/admissible.hpp"
#include "geonf/family.hpp"
#include "support.hpp"

#include <set>

using namespace geonf;
using namespace testing;

namespace {

const Real kTol = Real("1e-30");

}  // namespace

TEST_SUITE("family") {
  TEST_CASE("constant family: every coefficient is reproduced exactly") {
    std::mt19937_64 rng(7);
    const DiffeoJet F = random_diffeo(Omega::golden(), 6, 3, rng);
    const IpmReport r = ipm_degree_check(F, F, 6, all_ipm_targets(), kTol);
    CHECK(r.all_within());
    CHECK(r.max_residual <= kTol);
    std::set<IpmTarget> seen;
    for (const auto& row : r.rows) seen.insert(row.target);
    CHECK(seen.size() == 4);
  }

  TEST_CASE("L*_21 is affine in t") {
    std::mt19937_64 rng(11);
    const DiffeoJet F0 = random_diffeo(Omega::golden(), 4, 2, rng), F1 = random_diffeo(Omega::golden(), 4, 2, rng);
    const Real t("0.3");
    const Complex a = resonant_free(F0, 4).L.at(2, 1), b = resonant_free(F1, 4).L.at(2, 1);
    const Complex mid = resonant_free(affine_combination(F0, F1, t), 4).L.at(2, 1);
    CHECK(distance(mid, Complex(Real(1 - t)) * a + Complex(t) * b) <= kTol);

    const IpmReport r = ipm_degree_check(F0, F1, 4, {IpmTarget::Lstar}, kTol);
    for (const auto& row : r.rows)
      if (row.coefficient == "L_{2,1}") CHECK(row.degree_bound == 1);
  }

  TEST_CASE("random affine families satisfy all degree bounds") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 2; ++trial) {
      const DiffeoJet F0 = random_diffeo(Omega::golden(), 7, 4, rng), F1 = random_diffeo(Omega::golden(), 7, 4, rng);
      const IpmReport r = ipm_degree_check(F0, F1, 7, all_ipm_targets(), kTol);
      CHECK(r.all_within());
      CHECK(r.solves > 0);
      for (const auto& row : r.rows) CHECK_FALSE(row.fits_next.has_value());
    }
  }

  TEST_CASE("argument validation") {
    std::mt19937_64 rng(3);
    const DiffeoJet F = random_diffeo(Omega::golden(), 5, 3, rng);
    CHECK_THROWS(ipm_degree_check(F, F, 2, all_ipm_targets(), kTol));
    CHECK_THROWS(ipm_degree_check(F, random_diffeo(Omega::parse("0.1"), 5, 3, rng), 5, all_ipm_targets(), kTol));
    CHECK(parse_ipm_target("Gamma") == IpmTarget::Gamma);
    CHECK(to_string(IpmTarget::Lbalanced) == "Lbalanced");
    CHECK_THROWS(parse_ipm_target("gamma2"));
  }

  TEST_CASE("random maps are deterministic, bounded and respect oddness") {
    std::mt19937_64 a(99), b(99);
    const DiffeoJet Fa = random_diffeo(Omega::golden(), 6, 5, a), Fb = random_diffeo(Omega::golden(), 6, 5, b);
    CHECK(distance(Fa.series(), Fb.series()) == 0);
    for (int d = 2; d <= 5; ++d)
      for (int k = 0; k <= d; ++k) CHECK(Fa.series().at(d - k, k).abs() <= 1);

    std::mt19937_64 c(5);
    const DiffeoJet odd = random_diffeo(Omega::golden(), 7, 7, c, true);
    CHECK(odd.odd());
    for (int d = 2; d <= 7; d += 2) CHECK(odd.series().max_abs_degree(d) == 0);

    std::mt19937_64 u(1);
    for (int i = 0; i < 1000; ++i) {
      const double x = unit_uniform(u);
      CHECK((x >= 0 && x < 1));
    }
  }
}
