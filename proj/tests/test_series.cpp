#include <doctest.h>

#include "geonf/series_io.hpp"
#include "support.hpp"

using namespace geonf;
using namespace testing;

TEST_SUITE("series") {
  const Real eps = tol("1e-70");

  TEST_CASE("mul matches a naive sparse product and is commutative and associative") {
    Gen g;
    for (int trial = 0; trial < 10; ++trial) {
      const int N = g.integer(3, 9);
      const BiSeries a = g.bi(N), b = g.bi(N), c = g.bi(N);
      CHECK(distance(naive_mul(sparse(a), sparse(b), N), mul(a, b)) <= eps);
      CHECK(distance(mul(a, b), mul(b, a)) <= eps);
      CHECK(distance(mul(mul(a, b), c), mul(a, mul(b, c))) <= eps);
    }
  }

  TEST_CASE("tilde is an antilinear involution and multiplicative") {
    Gen g;
    for (int trial = 0; trial < 10; ++trial) {
      const BiSeries a = g.bi(7), b = g.bi(7);
      CHECK(distance(tilde(tilde(a)), a) == 0);
      CHECK(distance(tilde(mul(a, b)), mul(tilde(a), tilde(b))) <= eps);
      const Complex s = g.complex();
      CHECK(distance(tilde(s * a), s.conj() * tilde(a)) <= eps);
    }
  }

  TEST_CASE("square_modulus: closed forms and Hermitian symmetry") {
    const Omega om = Omega::golden();
    const Complex lam = DiffeoJet::rotation(om, 1).lambda();
    CHECK(distance(square_modulus(BiSeries::z(4)), BiSeries::zw(4)) == 0);

    BiSeries f = BiSeries::z(4);
    f.at(2, 0) = Complex(1);  // z(1+z)
    BiSeries expect(4);       // zw(1+z)(1+w)
    expect.at(1, 1) = 1;
    expect.at(2, 1) = 1;
    expect.at(1, 2) = 1;
    expect.at(2, 2) = 1;
    CHECK(distance(square_modulus(f), expect) <= eps);

    BiSeries h = lam * BiSeries::z(4);
    h.at(2, 0) = Complex(1);
    BiSeries e2(4);
    e2.at(1, 1) = lam * lam.conj();
    e2.at(2, 1) = lam.conj();
    e2.at(1, 2) = lam;
    e2.at(2, 2) = 1;
    CHECK(distance(square_modulus(h), e2) <= eps);
    CHECK(distance(e2.at(1, 1), Complex(1)) <= eps);

    Gen g;
    for (int trial = 0; trial < 5; ++trial) CHECK(hermitian_defect(square_modulus(g.bi(8, 1))) <= eps);
  }

  TEST_CASE("hat_compose: rotation acts diagonally and matches the hand expansion") {
    const Omega om = Omega::golden();
    const DiffeoJet R = DiffeoJet::rotation(om, 6);
    const Complex lam = R.lambda();
    CHECK(distance(hat_compose(BiSeries::zw(6), R.series()), BiSeries::zw(6)) <= eps);

    Gen g;
    const BiSeries L = g.bi(6, 2);
    const BiSeries LF = hat_compose(L, R.series());
    for (int d = 2; d <= 6; ++d)
      for (int s = 0; s <= d; ++s) {
        const int r = d - s;
        CHECK(distance(LF.at(r, s), R.lambda_power(r - s) * L.at(r, s)) <= eps);
      }

    BiSeries F = R.series().truncated(4);
    F.at(2, 0) = Complex(1);  // λz + z²
    BiSeries e(4);
    e.at(1, 1) = 1;
    e.at(2, 1) = lam.conj();
    e.at(1, 2) = lam;
    e.at(2, 2) = 1;
    CHECK(distance(hat_compose(BiSeries::zw(4), F), e) <= eps);
  }

  TEST_CASE("bivariate compose agrees with naive substitution") {
    Gen g;
    for (int trial = 0; trial < 6; ++trial) {
      const int N = g.integer(3, 7);
      const BiSeries f = g.bi(N), g1 = g.bi(N, 1), g2 = g.bi(N, 1);
      CHECK(distance(naive_compose(f, g1, g2, N), compose(f, g1, g2)) <= eps);
    }
  }

  TEST_CASE("diagonal examples") {
    CHECK(distance(diagonal(BiSeries::zw(4)), UniSeries::monomial(4, 2, Complex(1))) == 0);

    BiSeries L = BiSeries::zw(4);
    L.at(2, 1) = Complex(0, 1);
    L.at(1, 2) = Complex(0, -1);
    CHECK(distance(diagonal(L), UniSeries::monomial(4, 2, Complex(1))) <= eps);

    Gen g;
    const Complex c = g.complex();
    BiSeries M = BiSeries::zw(4);
    M.at(3, 0) = c;
    M.at(0, 3) = c.conj();
    UniSeries expect = UniSeries::monomial(4, 2, Complex(1));
    expect[3] = Complex(2 * c.re);
    CHECK(distance(diagonal(M), expect) <= eps);
  }

  TEST_CASE("univariate-into-bivariate composition") {
    const int N = 8;
    CHECK(distance(compose(UniSeries::identity(N), BiSeries::zw(N)), BiSeries::zw(N)) == 0);
    UniSeries g = UniSeries::identity(N);
    g[2] = Complex(1);
    BiSeries e = BiSeries::zw(N);
    e.at(2, 2) = 1;
    CHECK(distance(compose(g, BiSeries::zw(N)), e) <= eps);

    Gen gen;
    for (int trial = 0; trial < 5; ++trial) {
      const UniSeries a = gen.uni(N, 1), b = gen.uni(N, 1);
      const BiSeries L = gen.hermitian_L(N);
      CHECK(distance(compose(a, compose(b, L)), compose(compose(a, b), L)) <= eps);
      CHECK(distance(compose(a, b), naive_compose(a, b)) <= eps);
    }
  }

  TEST_CASE("inversion: Catalan oracle and involutivity") {
    const int N = 12;
    UniSeries g = UniSeries::identity(N);
    g[2] = Complex(1);
    // inverse of R + R² has coefficients (−1)^{n−1} C_{n−1}, C Catalan numbers
    std::vector<long> C{1};
    for (int n = 1; n < N; ++n) {
      long s = 0;
      for (int i = 0; i < n; ++i) s += C[static_cast<std::size_t>(i)] * C[static_cast<std::size_t>(n - 1 - i)];
      C.push_back(s);
    }
    const UniSeries inv = invert(g);
    for (int n = 1; n <= N; ++n) {
      const long c = C[static_cast<std::size_t>(n - 1)] * ((n % 2 == 1) ? 1 : -1);
      CHECK(distance(inv[n], Complex(static_cast<double>(c))) <= eps);
    }
    CHECK(distance(invert(UniSeries::identity(N)), UniSeries::identity(N)) == 0);

    Gen gen;
    for (int trial = 0; trial < 5; ++trial) {
      UniSeries h = gen.uni(N, 2);
      h[1] = gen.complex() + Complex(1);
      // rounding scales with the inverse's coefficients, which grow like |h_1|^{-n}
      const UniSeries inv = invert(h);
      const Real rel = eps * (1 + inv.max_abs());
      CHECK(distance(invert(inv), h) <= rel);
      CHECK(distance(compose(h, inv), UniSeries::identity(N)) <= rel);
    }
  }

  TEST_CASE("invert_pair gives the first component of the inverse of (Φ, Φ̃)") {
    Gen gen;
    for (int trial = 0; trial < 4; ++trial) {
      BiSeries phi = gen.bi(7, 2);
      phi.at(1, 0) = Complex(1);
      const BiSeries psi = invert_pair(phi);
      CHECK(distance(hat_compose(phi, psi), BiSeries::z(7)) <= eps);
      CHECK(distance(hat_compose(psi, phi), BiSeries::z(7)) <= eps);
    }
  }

  TEST_CASE("analytic substitutions") {
    const int N = 10;
    CHECK(distance(sqrt1p(UniSeries(N)), UniSeries::monomial(N, 0, Complex(1))) == 0);
    UniSeries u(N);
    u[1] = Complex(2);
    u[2] = Complex(1);
    UniSeries onepr = UniSeries::monomial(N, 0, Complex(1));
    onepr[1] = Complex(1);
    CHECK(distance(sqrt1p(u), onepr) <= eps);

    Gen gen;
    for (int trial = 0; trial < 5; ++trial) {
      const UniSeries v = gen.uni(N, 1);
      const UniSeries one = UniSeries::monomial(N, 0, Complex(1));
      const UniSeries r = sqrt1p(v);
      CHECK(distance(mul(r, r), one + v) <= eps);
      CHECK(distance(exp(log(one + v)), one + v) <= eps);
      CHECK(distance(log(exp(v)), v) <= eps);
    }
  }

  TEST_CASE("xy and zw charts") {
    BiSeries nu(4);  // x² + y²
    nu.at(2, 0) = 1;
    nu.at(0, 2) = 1;
    CHECK(distance(xy_to_zw(nu), BiSeries::zw(4)) <= eps);

    BiSeries half(4);
    half.at(1, 0) = Complex(Real(1) / 2);
    half.at(0, 1) = Complex(Real(1) / 2);
    CHECK(distance(xy_to_zw(BiSeries::z(4)), half) <= eps);

    BiSeries sq(4);  // x² − y² + 2ixy
    sq.at(2, 0) = 1;
    sq.at(0, 2) = -1;
    sq.at(1, 1) = Complex(0, 2);
    CHECK(distance(xy_to_zw(sq), BiSeries::monomial(4, 2, 0, Complex(1))) <= eps);

    Gen gen;
    const BiSeries f = gen.bi(8);
    CHECK(distance(zw_to_xy(xy_to_zw(f)), f) <= eps);
  }

  TEST_CASE("JSON round trip keeps at least precision − 8 bits") {
    Gen gen;
    const BiSeries f = gen.bi(6);
    const BiSeries back = bi_series_from_json(Json::parse(to_json(f).dump()));
    const Real bound = two_pow(-static_cast<long>(working_bits()) + 8);
    CHECK(distance(f, back) <= bound);
    const UniSeries u = gen.uni(6);
    CHECK(distance(uni_series_from_json(Json::parse(to_json(u).dump())), u) <= bound);
    CHECK_THROWS_AS(bi_series_from_json(Json::parse(R"({"order": 2, "entries": [[1]]})")), std::invalid_argument);
  }
}
