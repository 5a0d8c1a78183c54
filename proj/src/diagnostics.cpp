#include "geonf/diagnostics.hpp"

#include <stdexcept>

namespace geonf {

namespace {

// slope of the least-squares line through (x_i, y_i)
Real slope(const std::vector<Real>& x, const std::vector<Real>& y) {
  const auto n = static_cast<long>(x.size());
  Real mx(0), my(0);
  for (long i = 0; i < n; ++i) {
    mx += x[static_cast<std::size_t>(i)];
    my += y[static_cast<std::size_t>(i)];
  }
  mx /= n;
  my /= n;
  Real sxy(0), sxx(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

GrowthProfile finish(std::vector<GrowthRow> rows) {
  GrowthProfile p;
  p.rows = std::move(rows);
  if (p.rows.size() >= 2) {
    std::vector<Real> n, nlogn, y;
    for (const auto& r : p.rows) {
      n.emplace_back(r.n);
      nlogn.push_back(Real(r.n) * log(Real(r.n)));
      y.push_back(log(r.max_abs));
    }
    p.slope_n = slope(n, y);
    p.slope_nlogn = slope(nlogn, y);
    p.factorial_growth = p.rows.size() >= 3 && *p.slope_nlogn >= GrowthProfile::kFactorialSlope;
  }
  return p;
}

void require_order(int order) {
  if (order < 4) throw std::invalid_argument("growth_profile: order must be at least 4");
}

GrowthRow row(int n, const Real& m) { return {n, m, Real(pow(m, Real(1) / n))}; }

}  // namespace

std::string GrowthProfile::to_csv() const {
  std::string out = "n,max_abs,nth_root\n";
  for (const auto& r : rows) out += std::to_string(r.n) + "," + to_decimal(r.max_abs) + "," + to_decimal(r.nth_root) + "\n";
  return out;
}

GrowthProfile growth_profile(const BiSeries& s) {
  require_order(s.order());
  std::vector<GrowthRow> rows;
  for (int n = 1; n <= s.order(); ++n) {
    const Real m = s.max_abs_degree(n);
    if (m > 0) rows.push_back(row(n, m));
  }
  return finish(std::move(rows));
}

GrowthProfile growth_profile(const UniSeries& s) {
  require_order(s.order());
  std::vector<GrowthRow> rows;
  for (int n = 1; n <= s.order(); ++n) {
    const Real m = s[n].abs();
    if (m > 0) rows.push_back(row(n, m));
  }
  return finish(std::move(rows));
}

}  // namespace geonf
