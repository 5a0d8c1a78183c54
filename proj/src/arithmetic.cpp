#include "geonf/arithmetic.hpp"

#include "geonf/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace geonf {

ContinuedFraction::ContinuedFraction(std::vector<Int> quotients) : r_(std::move(quotients)) {
  Int pm1 = 1, qm1 = 0;  // p_{-1}, q_{-1}
  p_.push_back(0);
  q_.push_back(1);
  for (std::size_t k = 0; k < r_.size(); ++k) {
    if (r_[k] < 1) throw std::invalid_argument("partial quotients must be ≥ 1");
    const Int pk = r_[k] * p_.back() + pm1;
    const Int qk = r_[k] * q_.back() + qm1;
    pm1 = p_.back();
    qm1 = q_.back();
    p_.push_back(pk);
    q_.push_back(qk);
  }
}

ContinuedFraction ContinuedFraction::parse(const std::string& csv) {
  std::vector<Int> r;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty partial quotient in '" + csv + "'");
    const std::string tok = item.substr(b, e - b + 1);
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("partial quotient is not a positive integer: '" + tok + "'");
    r.emplace_back(tok);
  }
  if (r.empty()) throw std::invalid_argument("continued fraction needs at least one quotient");
  return ContinuedFraction(std::move(r));
}

Real ContinuedFraction::value() const {
  Real p, q;
  mpfr_set_z(p.backend().data(), p_.back().backend().data(), MPFR_RNDN);
  mpfr_set_z(q.backend().data(), q_.back().backend().data(), MPFR_RNDN);
  return p / q;
}

unsigned ContinuedFraction::required_bits() const {
  const auto bits = static_cast<unsigned>(boost::multiprecision::msb(q_.back())) + 1;
  return 2 * bits + 64;
}

std::string ContinuedFraction::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < r_.size(); ++k) {
    if (k) s += ',';
    s += r_[k].str();
  }
  return s;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t depth) {
  if (depth > cf.depth()) throw std::invalid_argument("convergents: depth exceeds the available quotients");
  std::vector<Convergent> out;
  for (std::size_t k = 0; k <= depth; ++k) out.push_back({cf.p(k), cf.q(k)});
  return out;
}

Int convergent_determinant(const ContinuedFraction& cf, std::size_t k) {
  if (k == 0) return cf.q(0) * 1 - cf.p(0) * 0;  // p_{-1} = 1, q_{-1} = 0
  return cf.q(k) * cf.p(k - 1) - cf.p(k) * cf.q(k - 1);
}

namespace {

Real to_real(const Int& n) {
  Real r;
  mpfr_set_z(r.backend().data(), n.backend().data(), MPFR_RNDN);
  return r;
}

}  // namespace

std::vector<Real> bruno_partial_sums(const ContinuedFraction& cf, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("bruno_partial_sums: depth must be ≥ 1");
  if (depth + 1 > cf.depth()) throw std::invalid_argument("bruno_partial_sums: needs depth+1 quotients");
  std::vector<Real> out;
  Real s(0);
  for (std::size_t k = 1; k <= depth; ++k) {
    s += log(to_real(cf.q(k + 1))) / to_real(cf.q(k));
    out.push_back(s);
  }
  return out;
}

LambdaDistance lambda_power_distance(const Real& omega, long n) {
  if (n < 1) throw std::invalid_argument("lambda_power_distance: n must be ≥ 1");
  Real x = omega * n;
  const long e = mpfr_get_exp(x.backend().data());
  if (!mpfr_zero_p(x.backend().data()) && e > static_cast<long>(working_bits()) - 16)
    throw GuardError("lambda_power_distance: n·ω retains no fractional bits at this precision (n = " +
                     std::to_string(n) + ")");
  Real theta = abs(x - round(x));
  Real d = 2 * abs(sin(pi() * theta));
  return {d, theta};
}

namespace {

WitnessScan scan(const Real& omega, long k_max, long stride) {
  WitnessScan out;
  for (long k = 1; k <= k_max; ++k) {
    const auto ld = lambda_power_distance(omega, stride * k);
    if (mpfr_zero_p(ld.distance.backend().data())) {
      out.exhausted.push_back(k);
      continue;
    }
    if (ld.distance * factorial(static_cast<unsigned long>(k)) <= 1) out.witnesses.push_back(k);
  }
  return out;
}

}  // namespace

WitnessScan super_liouville_witnesses(const Real& omega, long k_max) { return scan(omega, k_max, 1); }
WitnessScan doubled_witnesses(const Real& omega, long k_max) { return scan(omega, k_max, 2); }

Int int_factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.backend().data(), n);
  return r;
}

Int distance_numerator(const ContinuedFraction& cf, std::size_t k) {
  const Int& qd = cf.q(cf.depth());
  Int m = (cf.q(k) * cf.p(cf.depth())) % qd;
  if (2 * m > qd) m = qd - m;
  return m;
}

bool odd_witness_holds(const ContinuedFraction& cf, std::size_t k) {
  // m/q_d ≤ 1/(7 q_k!)  ⇔  7·q_k!·m ≤ q_d
  const Int& qk = cf.q(k);
  if (qk > kFactorialBudget) throw GuardError("odd_witness_holds: q_k exceeds the factorial budget");
  return 7 * int_factorial(qk.convert_to<unsigned long>()) * distance_numerator(cf, k) <= cf.q(cf.depth());
}

ContinuedFraction odd_super_liouville_construct(const std::vector<Int>& seed, std::size_t ell,
                                                std::size_t depth, unsigned long factorial_budget) {
  if (ell < 1 || seed.size() < ell) throw std::invalid_argument("seed must provide the first ell quotients");
  if (depth < ell) throw std::invalid_argument("depth must be at least ell");
  std::vector<Int> r(seed.begin(), seed.begin() + static_cast<std::ptrdiff_t>(ell));
  for (std::size_t k = ell + 1; k <= depth; ++k) {
    const ContinuedFraction partial(r);
    const Int& q1 = partial.q(k - 1);
    const Int& q2 = partial.q(k - 2);
    if (q1 > factorial_budget)
      throw GuardError("odd_super_liouville_construct: q_" + std::to_string(k - 1) + " = " + q1.str() +
                       " exceeds the factorial budget " + std::to_string(factorial_budget));
    const Int base = 7 * int_factorial(q1.convert_to<unsigned long>());
    Int eps = 0;
    if ((base * q1 + q2) % 2 == 0) eps = 1;  // parity of q_k flips with ε only when q_{k−1} is odd
    r.push_back(base + eps);
  }
  ContinuedFraction cf(std::move(r));
  for (std::size_t k = ell; k < depth; ++k) {
    if (cf.q(k) % 2 == 0) continue;
    if (!odd_witness_holds(cf, k))
      throw GuardError("odd_super_liouville_construct: witness bound fails at k = " + std::to_string(k));
  }
  return cf;
}

}  // namespace geonf
