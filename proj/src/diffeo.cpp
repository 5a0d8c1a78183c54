#include "geonf/diffeo.hpp"

#include "geonf/errors.hpp"

#include <algorithm>

namespace geonf {

namespace {

unsigned guard_bits() { return working_bits() + 64; }

}  // namespace

Omega Omega::parse(const std::string& s) {
  if (s == "golden") return golden();
  if (s.rfind("cf:", 0) == 0) {
    Omega o = from_cf(ContinuedFraction::parse(s.substr(3)));
    o.text = s;
    return o;
  }
  Omega o;
  {
    PrecisionScope hi(guard_bits());
    o.value = parse_real(s);
  }
  o.text = s;
  return o;
}

Omega Omega::from_cf(const ContinuedFraction& cf) {
  Omega o;
  {
    PrecisionScope hi(std::max(guard_bits(), cf.required_bits()));
    o.value = cf.value();
  }
  o.cf = cf;
  o.text = "cf:" + cf.to_string();
  return o;
}

Omega Omega::golden() {
  Omega o;
  {
    PrecisionScope hi(guard_bits());
    o.value = (sqrt(Real(5)) - 1) / 2;
  }
  o.text = "golden";
  return o;
}

Real small_divisor_threshold() { return two_pow(-static_cast<long>(working_bits() / 4)); }

DiffeoJet::DiffeoJet(Omega omega, const BiSeries& nonlinear, bool odd)
    : omega_(std::move(omega)), F_(nonlinear), odd_(odd) {
  for (int d = 0; d < 2 && d <= F_.order(); ++d)
    for (int k = 0; k <= d; ++k)
      if (!F_.at(d - k, k).is_zero()) throw std::invalid_argument("DiffeoJet: terms of degree < 2 are implied by ω");
  if (F_.order() < 1) throw std::invalid_argument("DiffeoJet: order must be at least 1");
  lambda_ = lambda_power(1);
  F_.at(1, 0) = lambda_;
  if (odd_)
    for (int d = 2; d <= F_.order(); d += 2)
      for (int k = 0; k <= d; ++k)
        if (!F_.at(d - k, k).is_zero()) throw std::invalid_argument("DiffeoJet: odd map with an even-degree term");
}

DiffeoJet DiffeoJet::rotation(Omega omega, int order) { return DiffeoJet(std::move(omega), BiSeries(order), true); }

bool DiffeoJet::holomorphic() const {
  for (int d = 1; d <= F_.order(); ++d)
    for (int k = 1; k <= d; ++k)
      if (!F_.at(d - k, k).is_zero()) return false;
  return true;
}

Complex DiffeoJet::lambda_power(long n) const {
  Complex hi;
  {
    PrecisionScope guard(std::max<unsigned>(guard_bits(), static_cast<unsigned>(
                                                              mpfr_get_prec(omega_.value.backend().data()))));
    Real x = omega_.value * n;
    x -= floor(x);
    hi = expi2pi(x);
  }
  return at_working(hi);
}

Complex DiffeoJet::divisor(long n) const {
  if (n == 0) return {};
  Complex hi;
  {
    PrecisionScope guard(std::max<unsigned>(guard_bits(), static_cast<unsigned>(
                                                              mpfr_get_prec(omega_.value.backend().data()))));
    Real x = omega_.value * n;
    x -= round(x);
    // 1 − e^{2πix} = −2i sin(πx) e^{iπx}, accurate for small x
    Real s = sin(pi() * x);
    Complex e = expi2pi(x / 2);
    hi = Complex(Real(0), Real(-2) * s) * e;
  }
  return at_working(hi);
}

void DiffeoJet::set_coeff(int j, int k, const Complex& c) {
  if (j + k < 2) throw std::invalid_argument("set_coeff: only nonlinear coefficients can be set");
  if (odd_ && (j + k) % 2 == 0 && !c.is_zero()) throw std::invalid_argument("set_coeff: would break oddness");
  F_.at(j, k) = c;
}

DiffeoJet DiffeoJet::with_order(int order) const {
  BiSeries nl = F_.truncated(order);
  nl.at(1, 0) = Complex();
  return DiffeoJet(omega_, nl, odd_);
}

void check_nonresonant(const DiffeoJet& F, long m_max) {
  const Real thr = small_divisor_threshold();
  for (long m = 1; m <= m_max; ++m)
    if (F.divisor(m).abs() < thr)
      throw GuardError("small divisor: |1 − λ^" + std::to_string(m) + "| is below 2^-" +
                       std::to_string(working_bits() / 4));
}

DiffeoJet affine_combination(const DiffeoJet& F0, const DiffeoJet& F1, const Real& t) {
  if (F0.order() != F1.order()) throw std::invalid_argument("affine_combination: order mismatch");
  BiSeries nl = (Real(1) - t) * F0.series() + t * F1.series();
  nl.at(1, 0) = Complex();
  return DiffeoJet(F0.omega(), nl, F0.odd() && F1.odd());
}

Json to_json(const DiffeoJet& F) {
  Json out;
  out["omega"] = F.omega().text;
  out["lambda"] = Json::array({to_decimal(F.lambda().re), to_decimal(F.lambda().im)});
  out["order"] = F.order();
  out["odd"] = F.odd();
  Json coeffs = Json::array();
  const auto& s = F.series();
  for (int d = 2; d <= s.order(); ++d)
    for (int k = 0; k <= d; ++k)
      if (!s.at(d - k, k).is_zero())
        coeffs.push_back(Json::array({d - k, k, to_decimal(s.at(d - k, k).re), to_decimal(s.at(d - k, k).im)}));
  out["coeffs"] = std::move(coeffs);
  return out;
}

DiffeoJet diffeo_from_json(const Json& j, const std::string& omega_override) {
  if (!j.is_object()) throw std::invalid_argument("DiffeoJet JSON must be an object");
  std::string om = omega_override;
  if (om.empty()) {
    if (!j.contains("omega")) throw std::invalid_argument("DiffeoJet JSON lacks \"omega\"");
    const auto& o = j.at("omega");
    om = o.is_string() ? o.get<std::string>() : o.dump();
  }
  if (!j.contains("order")) throw std::invalid_argument("DiffeoJet JSON lacks \"order\"");
  const int order = j.at("order").get<int>();
  BiSeries nl(order);
  if (j.contains("coeffs"))
    for (const auto& e : j.at("coeffs")) {
      if (!e.is_array() || e.size() != 4) throw std::invalid_argument("coefficient entry must be [j, k, re, im]");
      const int a = e[0].get<int>(), b = e[1].get<int>();
      if (a < 0 || b < 0 || a + b > order) throw std::invalid_argument("coefficient index exceeds the order");
      if (a + b < 2) throw std::invalid_argument("coefficients of degree < 2 are implied by ω");
      nl.at(a, b) = complex_from_json(e[2], e[3]);
    }
  const bool odd = j.value("odd", false);
  return DiffeoJet(Omega::parse(om), nl, odd);
}

}  // namespace geonf
