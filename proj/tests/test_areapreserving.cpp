#include <doctest.h>

#include "geonf/areapreserving.hpp"
#include "geonf/errors.hpp"
#include "support.hpp"

using namespace geonf;
using namespace testing;

namespace {

Rational random_rational(Gen& g, int num = 5, int den = 4) { return Rational(g.integer(-num, num), g.integer(1, den)); }

PlanarPolyMap random_area_map(Gen& g, bool odd) {
  PlanarPolyMap m;
  m.then(rational_rotation(Real("0.3819660112501051517954131656343618822796908201942371378645513772947395371810975502927927253")));
  for (int i = 0; i < 3; ++i) {
    const int power = odd ? 2 * g.integer(1, 2) + 1 : g.integer(1, 3);
    m.then(ShearFactor{random_rational(g), random_rational(g), random_rational(g, 3, 3), power});
  }
  return m;
}

}  // namespace

TEST_SUITE("areapreserving") {
  TEST_CASE("single shear: explicit polynomial and unit Jacobian") {
    // H = c x³: (x, y) ↦ (x, y − 3c x²)
    const Rational c(2, 3);
    const PlanarPoly m = factor_map(ShearFactor{1, 0, c, 2});
    CHECK(m.X == RatPoly::x(2));
    RatPoly y = RatPoly::y(2);
    y.at(2, 0) = -3 * c;
    CHECK(m.Y == y);
    CHECK(jacobian_determinant(m) == RatPoly::constant(1));

    Gen g;
    for (int trial = 0; trial < 10; ++trial) {
      const ShearFactor s{random_rational(g), random_rational(g), random_rational(g), g.integer(1, 5)};
      CHECK(factor_jacobian(s) == RatPoly::constant(1));
      const PlanarPoly id = compose(factor_map(factor_inverse(s)), factor_map(s));
      CHECK(id == identity_map());
    }
  }

  TEST_CASE("rational rotation is exactly unimodular and close to the rotation") {
    const Real omega("0.25");
    const LinearFactor r = rational_rotation(omega);
    CHECK(r.det() == 1);
    const Real c = cos(2 * pi() * omega), s = sin(2 * pi() * omega);
    CHECK(abs(Real(r.m11.convert_to<Real>() - c)) < Real("1e-13"));
    CHECK(abs(Real(r.m21.convert_to<Real>() - s)) < Real("1e-13"));
  }

  TEST_CASE("composite maps: certificate, expansion and modular points agree") {
    Gen g;
    for (int trial = 0; trial < 4; ++trial) {
      const PlanarPolyMap m = random_area_map(g, trial % 2 == 1);
      const AreaCertificate cert = certify_area_preserving(m);
      CHECK(cert.holds());
      CHECK(cert.points_checked > 0);
      const auto full = m.expand();
      if (full) {
        CHECK(jacobian_determinant(*full) == RatPoly::constant(1));
        const Int p("2305843009213693951");
        const Rational x(3, 7), y(-5, 11);
        const auto [vx, vy] = m.evaluate_mod(rational_mod(x, p), rational_mod(y, p), p);
        CHECK(vx == rational_mod(full->X.evaluate(x, y), p));
        CHECK(vy == rational_mod(full->Y.evaluate(x, y), p));
      }
      const PlanarPoly j = m.jet(6);
      CHECK(compose(j, m.inverse_jet(6), 6) == identity_map());
    }

    PlanarPolyMap bad;
    bad.then(LinearFactor{2, 0, 0, 1});
    CHECK_FALSE(certify_area_preserving(bad).holds());
  }

  TEST_CASE("span decomposition reconstructs homogeneous polynomials exactly") {
    for (int j = 0; j <= 6; ++j) {
      const auto [a, b] = span_node(j, 6);
      CHECK(a * a + b * b == 1);
    }
    Gen g;
    for (int d = 1; d <= 7; ++d) {
      RatPoly H(d);
      for (int q = 0; q <= d; ++q) H.at(d - q, q) = random_rational(g);
      const auto terms = span_decompose(H, d);
      CHECK(terms.size() == static_cast<std::size_t>(d + 1));
      CHECK(span_reconstruct(terms, d) == H);
    }
    RatPoly x3(3);  // x³ itself
    x3.at(3, 0) = 1;
    CHECK(span_reconstruct(span_decompose(x3, 3), 3) == x3);
  }

  TEST_CASE("jet extension reproduces the jet exactly") {
    Gen g;
    for (int trial = 0; trial < 4; ++trial) {
      const bool odd = trial % 2 == 1;
      const int N = odd ? 5 : 4;
      const PlanarPoly J = random_area_map(g, odd).jet(N);
      const ExtendedJet E = extend_jet(J, N, odd);
      CHECK(E.map.jet(N) == J);
      CHECK(certify_area_preserving(E.map).holds());
      if (odd) {
        CHECK(E.map.odd());
        for (std::size_t k = 0; k < E.shears_per_degree.size(); k += 2) CHECK(E.shears_per_degree[k] == 0);
      }
    }
  }

  TEST_CASE("jet extension rejects bad input") {
    PlanarPoly scaled{Rational(2) * RatPoly::x(1), RatPoly::y(1)};
    CHECK_THROWS_AS(extend_jet(scaled, 3, false), CheckError);
    PlanarPoly even{RatPoly::x(2), RatPoly::y(2)};
    even.X.at(2, 0) = 1;
    CHECK_THROWS_AS(extend_jet(even, 3, false), CheckError);  // x + x²: g_x = 2x
    CHECK_THROWS_AS(extend_jet(even, 3, true), std::invalid_argument);
  }

  TEST_CASE("JSON round trip of planar polynomials") {
    Gen g;
    const PlanarPoly J = random_area_map(g, false).jet(4);
    CHECK(planar_poly_from_json(Json::parse(to_json(J, 4).dump())) == J);
  }

  TEST_CASE("generating function u = x²y′²") {
    const int M = 7;
    BiSeries u(M + 1);
    u.at(2, 2) = 1;
    const GeneratedMap G = generating_map(u, Omega::golden());
    // y′ = y − 2x y′² gives y′ = y Σ C_k (−2xy)^k, so x′ = x + 2x²y′ has x^{k+2}y^{k+1} coefficient 2C_k(−2)^k
    long catalan = 1, pw = 1;
    for (int k = 0; 2 * k + 3 <= M; ++k) {
      CHECK(distance(G.X.at(k + 2, k + 1), Complex(static_cast<double>(2 * catalan * pw))) <= tol("1e-60"));
      CHECK(distance(G.Y.at(k, k + 1), Complex(static_cast<double>(catalan * pw))) <= tol("1e-60"));
      catalan = catalan * 2 * (2 * k + 1) / (k + 2);
      pw *= -2;
    }
    CHECK(G.jacobian_residual <= tol("1e-60"));
    CHECK(distance(G.F.lambda(), DiffeoJet::rotation(Omega::golden(), 1).lambda()) <= tol("1e-60"));
    CHECK_THROWS_AS(generating_map(BiSeries::zw(4), Omega::golden()), std::invalid_argument);
  }
}
