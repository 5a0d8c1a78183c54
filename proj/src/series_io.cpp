#include "geonf/series_io.hpp"

#include <stdexcept>

namespace geonf {

namespace {

Json entry(int j, int k, const Complex& c) {
  return Json::array({j, k, to_decimal(c.re), to_decimal(c.im)});
}

int order_of(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("entries"))
    throw std::invalid_argument("series JSON needs \"order\" and \"entries\"");
  const int n = j.at("order").get<int>();
  if (n < 0) throw std::invalid_argument("series order must be non-negative");
  return n;
}

}  // namespace

Real real_from_json(const Json& v) {
  if (v.is_string()) return parse_real(v.get<std::string>());
  if (v.is_number_integer()) return Real(v.get<long long>());
  if (v.is_number()) return Real(v.get<double>());
  throw std::invalid_argument("expected a number or decimal string");
}

Complex complex_from_json(const Json& re, const Json& im) { return {real_from_json(re), real_from_json(im)}; }

Json to_json(const BiSeries& s, const std::string& vars) {
  Json out;
  out["order"] = s.order();
  out["vars"] = vars;
  Json entries = Json::array();
  for (int d = 0; d <= s.order(); ++d)
    for (int k = 0; k <= d; ++k)
      if (!s.at(d - k, k).is_zero()) entries.push_back(entry(d - k, k, s.at(d - k, k)));
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const UniSeries& s, const std::string& vars) {
  Json out;
  out["order"] = s.order();
  out["vars"] = vars;
  Json entries = Json::array();
  for (int n = 0; n <= s.order(); ++n)
    if (!s[n].is_zero()) entries.push_back(entry(n, 0, s[n]));
  out["entries"] = std::move(entries);
  return out;
}

BiSeries bi_series_from_json(const Json& j) {
  BiSeries s(order_of(j));
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 4) throw std::invalid_argument("series entry must be [j, k, re, im]");
    const int a = e[0].get<int>(), b = e[1].get<int>();
    if (a < 0 || b < 0 || a + b > s.order()) throw std::invalid_argument("series entry exceeds the declared order");
    s.at(a, b) = complex_from_json(e[2], e[3]);
  }
  return s;
}

UniSeries uni_series_from_json(const Json& j) {
  UniSeries s(order_of(j));
  bool real = true;
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 4) throw std::invalid_argument("series entry must be [n, 0, re, im]");
    const int n = e[0].get<int>();
    if (n < 0 || n > s.order() || e[1].get<int>() != 0)
      throw std::invalid_argument("univariate entry out of range");
    s[n] = complex_from_json(e[2], e[3]);
    real = real && mpfr_zero_p(s[n].im.backend().data());
  }
  s.set_real(real);
  return s;
}

}  // namespace geonf
