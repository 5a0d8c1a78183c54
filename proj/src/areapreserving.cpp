#include "geonf/areapreserving.hpp"

#include "geonf/errors.hpp"

#include <algorithm>
#include <string>

namespace geonf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_identity_jet(const PlanarPoly& K, int n) {
  for (int d = 0; d <= n; ++d)
    for (int q = 0; q <= d; ++q) {
      const int p = d - q;
      const Rational ex = (d == 1 && p == 1) ? Rational(1) : Rational(0);
      const Rational ey = (d == 1 && q == 1) ? Rational(1) : Rational(0);
      if (K.X.coeff(p, q) != ex || K.Y.coeff(p, q) != ey) return false;
    }
  return true;
}

bool same_bits(const BiSeries& a, const BiSeries& b) {
  for (std::size_t i = 0; i < a.data().size(); ++i)
    if (a.data()[i].re != b.data()[i].re || a.data()[i].im != b.data()[i].im) return false;
  return true;
}

Rational binomial(int n, int k) {
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return Rational(r);
}

}  // namespace

PlanarPoly factor_map(const Factor& f) {
  return std::visit(overloaded{[](const LinearFactor& m) {
                                 return PlanarPoly{RatPoly::linear(m.m11, m.m12), RatPoly::linear(m.m21, m.m22)};
                               },
                               [](const ShearFactor& s) {
                                 const RatPoly l = pow(RatPoly::linear(s.a, s.b), s.power);
                                 const Rational k = s.c * (s.power + 1);
                                 return PlanarPoly{RatPoly::x() + (k * s.b) * l, RatPoly::y() - (k * s.a) * l};
                               }},
                    f);
}

Factor factor_inverse(const Factor& f) {
  return std::visit(overloaded{[](const LinearFactor& m) -> Factor {
                                 const Rational det = m.det();
                                 if (det == 0) throw std::invalid_argument("singular linear factor");
                                 return LinearFactor{m.m22 / det, -m.m12 / det, -m.m21 / det, m.m11 / det};
                               },
                               // ℓ is invariant along the shear, so the inverse is the shear with −c
                               [](const ShearFactor& s) -> Factor { return ShearFactor{s.a, s.b, -s.c, s.power}; }},
                    f);
}

int factor_degree(const Factor& f) {
  return std::visit(overloaded{[](const LinearFactor&) { return 1; },
                               [](const ShearFactor& s) { return std::max(1, s.power); }},
                    f);
}

RatPoly factor_jacobian(const Factor& f) { return jacobian_determinant(factor_map(f)); }

long PlanarPolyMap::degree_bound() const {
  long d = 1;
  for (const auto& f : factors_) {
    d *= factor_degree(f);
    if (d > (1L << 40)) return d;
  }
  return d;
}

PlanarPoly PlanarPolyMap::jet(int n) const {
  PlanarPoly cur = identity_map().truncated(n);
  for (const auto& f : factors_) cur = compose(factor_map(f), cur, n);
  return cur;
}

PlanarPoly PlanarPolyMap::inverse_jet(int n) const {
  PlanarPoly cur = identity_map().truncated(n);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) cur = compose(factor_map(factor_inverse(*it)), cur, n);
  return cur;
}

std::optional<PlanarPoly> PlanarPolyMap::expand(long max_degree) const {
  if (degree_bound() > max_degree) return std::nullopt;
  PlanarPoly cur = identity_map();
  for (const auto& f : factors_) cur = compose(factor_map(f), cur);
  return cur;
}

Int rational_mod(const Rational& r, const Int& p) {
  Int num = numerator(r) % p, den = denominator(r) % p;
  if (num < 0) num += p;
  if (den == 0) throw std::domain_error("rational_mod: denominator divisible by the modulus");
  Int inv;
  mpz_invert(inv.backend().data(), den.backend().data(), p.backend().data());
  return num * inv % p;
}

namespace {

Int eval_mod(const RatPoly& P, const Int& x, const Int& y, const Int& p) {
  Int acc = 0;
  for (int e = P.bound(); e >= 0; --e) {
    Int inner = 0;
    for (int q = P.bound() - e; q >= 0; --q) inner = (inner * y + rational_mod(P.at(e, q), p)) % p;
    acc = (acc * x + inner) % p;
  }
  return acc;
}

}  // namespace

std::pair<Int, Int> PlanarPolyMap::evaluate_mod(const Int& x, const Int& y, const Int& p) const {
  Int u = x, v = y;
  for (const auto& f : factors_) {
    const PlanarPoly m = factor_map(f);
    Int nu = eval_mod(m.X, u, v, p), nv = eval_mod(m.Y, u, v, p);
    u = std::move(nu);
    v = std::move(nv);
  }
  return {u, v};
}

Int PlanarPolyMap::jacobian_det_mod(const Int& x, const Int& y, const Int& p) const {
  // product of the factors' Jacobian matrices at the successive image points
  Int j11 = 1, j12 = 0, j21 = 0, j22 = 1;
  Int u = x, v = y;
  for (const auto& f : factors_) {
    const PlanarPoly m = factor_map(f);
    const Int a11 = eval_mod(derivative_x(m.X), u, v, p), a12 = eval_mod(derivative_y(m.X), u, v, p);
    const Int a21 = eval_mod(derivative_x(m.Y), u, v, p), a22 = eval_mod(derivative_y(m.Y), u, v, p);
    Int n11 = (a11 * j11 + a12 * j21) % p, n12 = (a11 * j12 + a12 * j22) % p;
    Int n21 = (a21 * j11 + a22 * j21) % p, n22 = (a21 * j12 + a22 * j22) % p;
    j11 = std::move(n11);
    j12 = std::move(n12);
    j21 = std::move(n21);
    j22 = std::move(n22);
    Int nu = eval_mod(m.X, u, v, p), nv = eval_mod(m.Y, u, v, p);
    u = std::move(nu);
    v = std::move(nv);
  }
  Int d = (j11 * j22 - j12 * j21) % p;
  if (d < 0) d += p;
  return d;
}

bool PlanarPolyMap::odd() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) {
    const auto* s = std::get_if<ShearFactor>(&f);
    return !s || s->c == 0 || s->power % 2 == 1;
  });
}

PlanarPolyMap shear_map(const Rational& a, const Rational& b, const Rational& c, int d) {
  if (d < 1) throw std::invalid_argument("shear_map: power must be at least 1");
  PlanarPolyMap m;
  m.then(ShearFactor{a, b, c, d});
  return m;
}

AreaCertificate certify_area_preserving(const PlanarPolyMap& m) {
  AreaCertificate cert;
  const RatPoly one = RatPoly::constant(1);
  cert.factors_unimodular = std::all_of(m.factors().begin(), m.factors().end(),
                                        [&](const Factor& f) { return factor_jacobian(f) == one; });
  if (auto full = m.expand()) cert.expanded_unimodular = jacobian_determinant(*full) == one;
  const Int p = (Int(1) << 61) - 1;
  const long pts[][2] = {{12345, 67891}, {-271828, 314159}, {2, -3}, {987654321, 123456789}};
  cert.points_unimodular = true;
  for (const auto& pt : pts) {
    ++cert.points_checked;
    Int x = Int(pt[0]) % p, y = Int(pt[1]) % p;
    if (x < 0) x += p;
    if (y < 0) y += p;
    if (m.jacobian_det_mod(x, y, p) != 1) cert.points_unimodular = false;
  }
  return cert;
}

std::pair<Rational, Rational> span_node(int j, int d) {
  const Real half_angle = pi() * j / (2 * (d + 1));
  const Rational t = dyadic_rational(tan(half_angle), 16);
  const Rational den = 1 + t * t;
  return {(1 - t * t) / den, 2 * t / den};
}

std::vector<SpanTerm> span_decompose(const RatPoly& H, int d) {
  if (d < 0) throw std::invalid_argument("span_decompose: negative degree");
  for (int e = 0; e <= H.bound(); ++e)
    if (e != d)
      for (int q = 0; q <= e; ++q)
        if (H.at(e - q, q) != 0) throw std::invalid_argument("span_decompose: H is not homogeneous of degree d");
  const int n = d + 1;
  std::vector<std::pair<Rational, Rational>> nodes;
  for (int j = 0; j < n; ++j) nodes.push_back(span_node(j, d));
  // row q: Σ_j c_j binom(d,q) a_j^{d−q} b_j^q = H_{d−q,q}
  std::vector<std::vector<Rational>> M(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n) + 1));
  for (int q = 0; q <= d; ++q) {
    const Rational bq = binomial(d, q);
    for (int j = 0; j < n; ++j) {
      Rational v = bq;
      for (int i = 0; i < d - q; ++i) v *= nodes[static_cast<std::size_t>(j)].first;
      for (int i = 0; i < q; ++i) v *= nodes[static_cast<std::size_t>(j)].second;
      M[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)] = v;
    }
    M[static_cast<std::size_t>(q)][static_cast<std::size_t>(n)] = H.coeff(d - q, q);
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && M[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0) ++piv;
    if (piv == n) throw std::runtime_error("span_decompose: singular node system");
    std::swap(M[static_cast<std::size_t>(col)], M[static_cast<std::size_t>(piv)]);
    const Rational p = M[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (auto& v : M[static_cast<std::size_t>(col)]) v /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rational f = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int k = col; k <= n; ++k)
        M[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -= f * M[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
    }
  }
  std::vector<SpanTerm> out;
  for (int j = 0; j < n; ++j)
    out.push_back({M[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)], nodes[static_cast<std::size_t>(j)].first,
                   nodes[static_cast<std::size_t>(j)].second});
  return out;
}

RatPoly span_reconstruct(const std::vector<SpanTerm>& terms, int d) {
  RatPoly s(d);
  for (const auto& t : terms)
    if (t.c != 0) s += t.c * pow(RatPoly::linear(t.a, t.b), d);
  return s;
}

LinearFactor rational_rotation(const Real& omega, unsigned bits) {
  Real frac = omega - floor(omega);
  // tan(πω) blows up near ω = ½; rotate by π first and flip signs there
  bool flip = false;
  if (frac > Real(1) / 4 && frac < Real(3) / 4) {
    frac -= Real(1) / 2;
    flip = true;
  } else if (frac >= Real(3) / 4) {
    frac -= 1;
  }
  const Rational t = dyadic_rational(tan(pi() * frac), bits);
  const Rational den = 1 + t * t;
  Rational c = (1 - t * t) / den, s = 2 * t / den;
  if (flip) {
    c = -c;
    s = -s;
  }
  return {c, -s, s, c};
}

ExtendedJet extend_jet(const PlanarPoly& J, int N, bool odd) {
  if (N < 1) throw std::invalid_argument("extend_jet: N must be at least 1");
  const PlanarPoly jet = J.truncated(N);
  if (jet.X.coeff(0, 0) != 0 || jet.Y.coeff(0, 0) != 0) throw std::invalid_argument("extend_jet: J must fix the origin");
  if (odd && !jet.is_odd()) throw std::invalid_argument("extend_jet: odd extension requested for a jet with even terms");
  const LinearFactor lin{jet.X.coeff(1, 0), jet.X.coeff(0, 1), jet.Y.coeff(1, 0), jet.Y.coeff(0, 1)};
  if (lin.det() != 1) throw CheckError("extend_jet: linear part has determinant " + lin.det().str() + ", not 1");
  ExtendedJet out;
  out.map.then(lin);
  for (int n = 1; n < N; ++n) {
    const int m = n + 1;
    const PlanarPoly K = compose(jet.truncated(m), out.map.inverse_jet(m), m);
    if (!is_identity_jet(K, n)) throw std::logic_error("extend_jet: stage invariant lost at degree " + std::to_string(n));
    const PlanarPoly gh = K.homogeneous_part(m);
    const RatPoly defect = derivative_x(gh.X) + derivative_y(gh.Y);
    if (!defect.is_zero())
      throw CheckError("extend_jet: jet is not area-preserving at degree " + std::to_string(m) +
                       " (g_x + h_y ≠ 0)");
    if (gh.X.is_zero() && gh.Y.is_zero()) {
      out.shears_per_degree.push_back(0);
      continue;
    }
    // H homogeneous of degree m+1 with H_y = g, H_x = −h
    RatPoly H(m + 1);
    for (int q = 0; q <= m; ++q) H.at(m - q, q + 1) = gh.X.coeff(m - q, q) / (q + 1);
    H.at(m + 1, 0) = -gh.Y.coeff(m, 0) / (m + 1);
    if (!(derivative_y(H) == gh.X) || !(derivative_x(H) == Rational(-1) * gh.Y))
      throw std::logic_error("extend_jet: Hamiltonian primitive inconsistent at degree " + std::to_string(m));
    int count = 0;
    for (const auto& t : span_decompose(H, m + 1)) {
      if (t.c == 0) continue;
      out.map.then(ShearFactor{t.a, t.b, t.c, m});
      ++count;
    }
    out.shears_per_degree.push_back(count);
  }
  return out;
}

Rational rational_from_json(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return Rational(v.get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument("not an exact rational: " + v.get<std::string>());
    }
  }
  throw std::invalid_argument("exact rational must be an integer or a \"p/q\" string");
}

Json to_json(const PlanarPoly& m, int order) {
  Json out;
  out["order"] = order;
  out["vars"] = "xy";
  Json entries = Json::array();
  for (int d = 0; d <= order; ++d)
    for (int q = 0; q <= d; ++q) {
      const Rational X = m.X.coeff(d - q, q), Y = m.Y.coeff(d - q, q);
      if (X == 0 && Y == 0) continue;
      entries.push_back(Json::array({d - q, q, X.str(), Y.str()}));
    }
  out["entries"] = std::move(entries);
  return out;
}

PlanarPoly planar_poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries")) throw std::invalid_argument("planar map JSON needs \"entries\"");
  if (j.contains("vars") && j.at("vars") != "xy") throw std::invalid_argument("planar map JSON must use vars \"xy\"");
  PlanarPoly m{RatPoly(1), RatPoly(1)};
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 4) throw std::invalid_argument("entry must be [p, q, X, Y]");
    const int p = e[0].get<int>(), q = e[1].get<int>();
    if (p < 0 || q < 0) throw std::invalid_argument("negative exponent");
    m.X.at(p, q) = rational_from_json(e[2]);
    m.Y.at(p, q) = rational_from_json(e[3]);
  }
  return m;
}

Json to_json(const PlanarPolyMap& m) {
  Json fs = Json::array();
  for (const auto& f : m.factors())
    std::visit(overloaded{[&](const LinearFactor& l) {
                            fs.push_back({{"type", "linear"},
                                          {"matrix", Json::array({l.m11.str(), l.m12.str(), l.m21.str(), l.m22.str()})}});
                          },
                          [&](const ShearFactor& s) {
                            fs.push_back({{"type", "shear"},
                                          {"a", s.a.str()},
                                          {"b", s.b.str()},
                                          {"c", s.c.str()},
                                          {"power", s.power}});
                          }},
               f);
  return fs;
}

GeneratedMap generating_map(const BiSeries& u, const Omega& omega) {
  const int M = u.order() - 1;
  if (M < 1) throw std::invalid_argument("generating_map: u must have order at least 2");
  for (int d = 0; d < 3 && d <= u.order(); ++d)
    for (int k = 0; k <= d; ++k)
      if (!u.at(d - k, k).is_zero()) throw std::invalid_argument("generating_map: u must start at degree 3");
  const BiSeries ux = derivative_z(u), uy = derivative_w(u);
  const BiSeries x = BiSeries::z(M), y = BiSeries::w(M);
  BiSeries yp = y;
  int it = 0;
  for (;; ++it) {
    if (it > M + 2) throw CheckError("generating_map: fixed-point iteration did not stabilize");
    BiSeries next = y - compose(ux, x, yp);
    if (same_bits(next, yp)) break;
    yp = std::move(next);
  }
  BiSeries xp = x + compose(uy, x, yp);
  BiSeries det = mul(derivative_z(xp), derivative_w(yp)) - mul(derivative_w(xp), derivative_z(yp));
  det.at(0, 0) -= Complex(1);
  // z′ = x′ + i y′ in the complex chart, then rotate
  BiSeries zp = xy_to_zw(xp + Complex(0, 1) * yp);
  DiffeoJet rot = DiffeoJet::rotation(omega, M);
  BiSeries nl = rot.lambda() * zp;
  nl.at(1, 0) = Complex();  // x + i y = z exactly, so the linear part is λz
  nl.at(0, 1) = Complex();
  return {xp, yp, DiffeoJet(omega, nl), det.max_abs(), it};
}

}  // namespace geonf
