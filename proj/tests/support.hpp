#pragma once

#include "geonf/diffeo.hpp"
#include "geonf/series.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <utility>

// Hand-rolled generators and naive reference arithmetic shared by the unit tests.
namespace testing {

using namespace geonf;

inline constexpr std::uint64_t kSeed = 20240611;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  int integer(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Complex complex(double r = 0.7) { return Complex(uniform(-r, r), uniform(-r, r)); }

  // nonlinear terms of degree 2..max_degree (only odd degrees if odd), coefficients with |F_jk| ≤ 1
  DiffeoJet diffeo(const Omega& omega, int order, int max_degree = 4, bool odd = false) {
    BiSeries nl(order);
    for (int d = 2; d <= std::min(order, max_degree); ++d) {
      if (odd && d % 2 == 0) continue;
      for (int k = 0; k <= d; ++k) nl.at(d - k, k) = complex();
    }
    return DiffeoJet(omega, nl, odd);
  }
  DiffeoJet holomorphic(const Omega& omega, int order, int max_degree = 4) {
    BiSeries nl(order);
    for (int d = 2; d <= std::min(order, max_degree); ++d) nl.at(d, 0) = complex();
    return DiffeoJet(omega, nl, false);
  }
  BiSeries bi(int order, int min_degree = 0) {
    BiSeries s(order);
    for (int d = min_degree; d <= order; ++d)
      for (int k = 0; k <= d; ++k) s.at(d - k, k) = complex();
    return s;
  }
  UniSeries uni(int order, int min_degree = 0) {
    UniSeries s(order);
    for (int n = min_degree; n <= order; ++n) s[n] = complex();
    return s;
  }
  // zw + Hermitian terms of degree 3..order
  BiSeries hermitian_L(int order) {
    BiSeries L = BiSeries::zw(order);
    for (int d = 3; d <= order; ++d)
      for (int s = 0; s <= d; ++s) {
        const int r = d - s;
        if (r < s) continue;
        const Complex c = r == s ? Complex(uniform(-0.7, 0.7)) : complex();
        L.at(r, s) = c;
        L.at(s, r) = c.conj();
      }
    return L;
  }
  // real g = R + O(R²)
  UniSeries group_element(int order) {
    UniSeries g = UniSeries::identity(order);
    for (int n = 2; n <= order; ++n) g[n] = Complex(uniform(-0.7, 0.7));
    g.set_real(true);
    return g;
  }

 private:
  std::mt19937_64 rng_;
};

// Sparse naive product, truncated at total degree n: an oracle independent of the dense kernels.
using Sparse = std::map<std::pair<int, int>, Complex>;

inline Sparse sparse(const BiSeries& s) {
  Sparse out;
  for (int d = 0; d <= s.order(); ++d)
    for (int k = 0; k <= d; ++k)
      if (!s.at(d - k, k).is_zero()) out[{d - k, k}] = s.at(d - k, k);
  return out;
}

inline Sparse naive_mul(const Sparse& a, const Sparse& b, int n) {
  Sparse out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      const int j = ka.first + kb.first, k = ka.second + kb.second;
      if (j + k <= n) out[{j, k}] += va * vb;
    }
  return out;
}

// Σ_jk f_jk g1^j g2^k by repeated naive products
inline Sparse naive_compose(const BiSeries& f, const BiSeries& g1, const BiSeries& g2, int n) {
  Sparse acc;
  const Sparse a = sparse(g1), b = sparse(g2);
  for (int d = 0; d <= f.order(); ++d)
    for (int k = 0; k <= d; ++k) {
      const int j = d - k;
      if (f.at(j, k).is_zero()) continue;
      Sparse term{{{0, 0}, f.at(j, k)}};
      for (int i = 0; i < j; ++i) term = naive_mul(term, a, n);
      for (int i = 0; i < k; ++i) term = naive_mul(term, b, n);
      for (const auto& [key, v] : term) acc[key] += v;
    }
  return acc;
}

inline Real distance(const Sparse& a, const BiSeries& b) {
  Real m(0);
  for (int d = 0; d <= b.order(); ++d)
    for (int k = 0; k <= d; ++k) {
      const auto it = a.find({d - k, k});
      const Complex x = it == a.end() ? Complex() : it->second;
      m = std::max(m, (x - b.at(d - k, k)).abs());
    }
  return m;
}

inline Real distance(const BiSeries& a, const BiSeries& b) { return (a - b).max_abs(); }
inline Real distance(const UniSeries& a, const UniSeries& b) { return (a - b).max_abs(); }
inline Real distance(const Complex& a, const Complex& b) { return (a - b).abs(); }

// naive univariate composition g(h) by repeated products
inline UniSeries naive_compose(const UniSeries& g, const UniSeries& h) {
  UniSeries acc(g.order()), p = UniSeries::monomial(g.order(), 0, Complex(1));
  const UniSeries ht = h.truncated(g.order());
  for (int n = 0; n <= g.order(); ++n) {
    for (int i = 0; i <= g.order(); ++i) acc[i] += g[n] * p[i];
    UniSeries next(g.order());
    for (int i = 0; i <= g.order(); ++i)
      for (int j = 0; i + j <= g.order(); ++j) next[i + j] += p[i] * ht[j];
    p = next;
  }
  return acc;
}

inline Real tol(const char* s) { return Real(s); }

}  // namespace testing
