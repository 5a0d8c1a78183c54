#pragma once

#include "geonf/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geonf {

struct GrowthRow {
  int n;
  Real max_abs;    // max |coefficient| of total degree n
  Real nth_root;   // max_abs^{1/n}
};

// Reports growth only; it never asserts divergence, which is an order-∞ statement.
struct GrowthProfile {
  std::vector<GrowthRow> rows;  // degrees n ≥ 1 with a nonzero coefficient, increasing
  // least-squares slopes of log max_abs against n and against n·log n (needs ≥ 2 rows)
  std::optional<Real> slope_n;
  std::optional<Real> slope_nlogn;
  // heuristic: ≥ 3 rows and slope_nlogn ≥ kFactorialSlope
  bool factorial_growth = false;
  static constexpr double kFactorialSlope = 0.5;

  std::string to_csv() const;  // header n,max_abs,nth_root
};

// Throws std::invalid_argument for order < 4.
GrowthProfile growth_profile(const BiSeries& s);
GrowthProfile growth_profile(const UniSeries& s);

}  // namespace geonf
