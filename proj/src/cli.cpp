#include "geonf/cli.hpp"

#include "geonf/admissible.hpp"
#include "geonf/areapreserving.hpp"
#include "geonf/arithmetic.hpp"
#include "geonf/diagnostics.hpp"
#include "geonf/errors.hpp"
#include "geonf/examples.hpp"
#include "geonf/family.hpp"
#include "geonf/foliation.hpp"
#include "geonf/involutions.hpp"
#include "geonf/normalize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace geonf::cli {

namespace {

struct Options {
  std::string omega = "golden";
  int order = 8;
  unsigned bits = kDefaultBits;
  std::string tol;
  std::string format = "json";
  std::uint64_t seed = 1;
  int threads = 1;  // accepted for interface stability; every command runs single-threaded
  std::string input;
  int max_degree = 4;
  // arithmetic and examples
  std::string seed_cf = "2,1";
  int ell = 0;  // 0: the seed length
  int depth = 3;
  int p = 1;
  // per-command
  bool conjugators = false;
  bool odd = false;
  std::string kind = "yoccoz";
  int d = 2;
  std::string targets = "all";
  int samples = 1;
  std::string series = "Lbalanced";
};

// Which flags were given explicitly
struct Given {
  CLI::Option* omega = nullptr;
  CLI::Option* order = nullptr;
  CLI::Option* depth = nullptr;
  CLI::Option* ell = nullptr;
  bool has(CLI::Option* o) const { return o && o->count() > 0; }
};

class Failed : public std::runtime_error {  // output was written, but a reported check failed
 public:
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  return Json::parse(in);
}

std::string dec(const Real& x) { return to_decimal(x); }

Real tolerance(const Options& o) { return o.tol.empty() ? default_tolerance() : parse_real(o.tol); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void require(bool ok, const std::string& what) {
  if (!ok) throw Failed(what);
}

void require_json(const Options& o, const std::string& cmd) {
  if (o.format != "json") throw std::invalid_argument(cmd + ": only --format json is available");
}

DiffeoJet load_jet(const Options& o, const Given& g) {
  if (!o.input.empty()) {
    DiffeoJet F = diffeo_from_json(read_json(o.input), g.has(g.omega) ? o.omega : "");
    return g.has(g.order) ? F.with_order(o.order) : F;
  }
  std::mt19937_64 rng(o.seed);
  return random_diffeo(Omega::parse(o.omega), o.order, o.max_degree, rng);
}

Json json_of(const Witness& w) {
  return {{"p", w.p},          {"n", w.n},           {"coefficient", w.coefficient}, {"value", dec(w.value)},
          {"bound", dec(w.bound)}, {"holds", w.holds}};
}

Json json_of(const GrowthProfile& gp) {
  Json rows = Json::array();
  for (const auto& r : gp.rows) rows.push_back({{"n", r.n}, {"max_abs", dec(r.max_abs)}, {"nth_root", dec(r.nth_root)}});
  Json j{{"rows", rows}};
  j["slope_n"] = gp.slope_n ? Json(dec(*gp.slope_n)) : Json();
  j["slope_nlogn"] = gp.slope_nlogn ? Json(dec(*gp.slope_nlogn)) : Json();
  j["factorial_growth"] = gp.factorial_growth;
  return j;
}

Json quotients_json(const ContinuedFraction& cf) {
  Json q = Json::array();
  for (const auto& r : cf.quotients()) q.push_back(r.str());
  return q;
}

ContinuedFraction cf_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("quotients") || !j.at("quotients").is_array())
    throw std::invalid_argument("continued fraction JSON needs a \"quotients\" array");
  std::vector<Int> q;
  for (const auto& v : j.at("quotients")) q.emplace_back(v.is_string() ? v.get<std::string>() : v.dump());
  return ContinuedFraction(std::move(q));
}

std::vector<Int> seed_quotients(const Options& o) { return ContinuedFraction::parse(o.seed_cf).quotients(); }

ContinuedFraction constructed_cf(const Options& o, const Given& g) {
  const auto seed = seed_quotients(o);
  const std::size_t ell = g.has(g.ell) ? static_cast<std::size_t>(o.ell) : seed.size();
  return odd_super_liouville_construct(seed, ell, static_cast<std::size_t>(o.depth));
}

// ---- commands ----

void cmd_admissible(const Options& o, const Given& g, std::ostream& out) {
  require_json(o, "admissible");
  const DiffeoJet F = load_jet(o, g);
  const AdmissiblePair P = resonant_free(F, F.order());
  emit(out, {{"F", to_json(F)}, {"L", to_json(P.L)}, {"Gamma", to_json(P.Gamma, "R")}, {"residual", dec(P.residual)}});
  require(P.residual <= tolerance(o), "conjugacy residual exceeds --tol");
}

void cmd_balanced(const Options& o, const Given& g, std::ostream& out) {
  require_json(o, "balanced");
  const DiffeoJet F = load_jet(o, g);
  const Real tol = tolerance(o);
  const Balanced B = balanced(F, F.order(), tol);
  emit(out, {{"F", to_json(F)},
             {"L", to_json(B.pair.L)},
             {"Gamma", to_json(B.pair.Gamma, "R")},
             {"tau", to_json(B.tau.tau)},
             {"g", to_json(B.g, "R")},
             {"residual", dec(B.pair.residual)},
             {"involution_residual", dec(B.tau.residual)},
             {"identity_residual", dec(B.identity_residual)},
             {"odd_residual", dec(B.odd_residual)}});
  require(B.pair.residual <= tol && B.identity_residual <= tol, "balanced pair residual exceeds --tol");
}

void cmd_involution(const Options& o, const Given& g, std::ostream& out) {
  require_json(o, "involution");
  const DiffeoJet F = load_jet(o, g);
  const Real tol = tolerance(o);
  const BiSeries L = resonant_free(F, F.order(), false).L;
  const Involution a = tau_via_ell(L), b = tau_via_recursion(L);
  const Real two_path = (a.tau - b.tau).max_abs();
  Json j{{"F", to_json(F)},
         {"tau", to_json(a.tau)},
         {"involution_residual", dec(a.residual)},
         {"two_path_difference", dec(two_path)}};
  bool ok = two_path <= tol && a.residual <= tol;
  if (o.conjugators) {
    const Conjugator C = conjugator_of(a.tau, tol);
    std::mt19937_64 rng(o.seed + 1);
    const DiffeoJet F2 = random_diffeo(F.omega(), F.order(), o.max_degree, rng);
    const UniSeries tau2 = tau_via_ell(resonant_free(F2, F2.order(), false).L).tau;
    UniSeries gamma = UniSeries::identity(a.tau.order());
    if (gamma.order() >= 3) gamma[3] = Complex(1);
    const Conjugacy psi = conjugators_between(a.tau, tau2, gamma, tol);
    j["conjugators"] = {{"U", to_json(C.U)},
                       {"V", to_json(C.V)},
                       {"E", to_json(C.E)},
                       {"conjugacy_residual", dec(C.conjugacy_residual)},
                       {"even_residual", dec(C.even_residual)},
                       {"fixed_residual", dec(C.fixed_residual)},
                       {"inverse_residual", dec(C.inverse_residual)},
                       {"psi", to_json(psi.psi)},
                       {"psi_residual", dec(psi.residual)}};
    ok = ok && C.conjugacy_residual <= tol && C.even_residual <= tol && C.fixed_residual <= tol &&
         C.inverse_residual <= tol && psi.residual <= tol;
  }
  emit(out, j);
  require(ok, "involution residual exceeds --tol");
}

void cmd_normalize(const Options& o, const Given& g, std::ostream& out) {
  require_json(o, "normalize");
  const DiffeoJet F = load_jet(o, g);
  const Real tol = tolerance(o);
  const Balanced B = balanced(F, F.order(), tol);
  const BiSeries phi = morse_phi(B.pair.L);
  const Real morse = (square_modulus(phi) - B.pair.L).max_abs();
  const NormalForm nf = geometric_normal_form(F, phi, F.order());
  const Polar polar = polar_decompose(F, nf.G, tol);
  emit(out, {{"F", to_json(F)},
             {"phi", to_json(phi)},
             {"G", to_json(nf.G)},
             {"modulus", to_json(nf.modulus)},
             {"f", to_json(polar.f, "R")},
             {"beta", to_json(polar.beta)},
             {"morse_residual", dec(morse)},
             {"offdiag_residual", dec(nf.offdiag_residual)},
             {"radial_residual", dec(polar.radial_residual)},
             {"reconstruction_residual", dec(polar.reconstruction_residual)}});
  require(morse <= tol && nf.offdiag_residual <= tol, "normal-form residual exceeds --tol");
}

void cmd_verify(const Options& o, const Given& g, std::ostream& out) {
  require_json(o, "verify");
  const DiffeoJet F = load_jet(o, g);
  const AdmissiblePair P = resonant_free(F, F.order());
  emit(out, {{"order", F.order()}, {"residual", dec(P.residual)}});
  require(P.residual <= tolerance(o), "conjugacy residual exceeds --tol");
}

void cmd_linearize(const Options& o, const Given& g, std::ostream& out) {
  require_json(o, "linearize");
  const DiffeoJet F = load_jet(o, g);
  const Linearization lin = linearize_holomorphic(F, F.order());
  emit(out, {{"h", to_json(lin.h)},
             {"residual", dec(lin.residual)},
             {"admissible_residual", dec(lin.admissible_residual)}});
  require(lin.residual <= tolerance(o), "linearization residual exceeds --tol");
}

void cmd_conservative(const Options& o, const Given& g, std::ostream& out) {
  require_json(o, "conservative");
  const DiffeoJet F = load_jet(o, g);
  const Conservativity c = is_formally_conservative(F, F.order(), tolerance(o));
  emit(out, {{"conservative", c.conservative}, {"Gamma", to_json(c.Gamma, "R")}, {"deviation", dec(c.deviation)}});
}

void cmd_bruno(const Options& o, const Given& g, std::ostream& out) {
  ContinuedFraction cf;
  if (!o.input.empty()) {
    cf = cf_from_json(read_json(o.input));
  } else if (o.omega == "golden") {
    const std::size_t n = g.has(g.depth) ? static_cast<std::size_t>(o.depth) + 1 : 11;
    cf = ContinuedFraction(std::vector<Int>(n, Int(1)));
  } else if (o.omega.rfind("cf:", 0) == 0) {
    cf = ContinuedFraction::parse(o.omega.substr(3));
  } else {
    throw std::invalid_argument("bruno needs continued-fraction data: --omega cf:a,b,c, --omega golden or --input");
  }
  if (cf.depth() < 2) throw std::invalid_argument("bruno needs at least two quotients");
  const std::size_t K = g.has(g.depth) ? static_cast<std::size_t>(o.depth) : cf.depth() - 1;
  if (K + 1 > cf.depth()) throw std::invalid_argument("--depth exceeds the number of quotients minus one");
  PrecisionScope scope(std::max(o.bits, cf.required_bits()));
  const auto sums = bruno_partial_sums(cf, K);
  if (o.format == "csv") {
    out << "K,S_K\n";
    for (std::size_t k = 0; k < sums.size(); ++k) out << k + 1 << ',' << dec(sums[k]) << '\n';
    return;
  }
  require_json(o, "bruno");
  Json conv = Json::array(), dets = Json::array(), s = Json::array();
  for (const auto& c : convergents(cf, cf.depth())) conv.push_back({c.p.str(), c.q.str()});
  for (std::size_t k = 0; k <= cf.depth(); ++k) dets.push_back(convergent_determinant(cf, k).str());
  for (const auto& x : sums) s.push_back(dec(x));
  emit(out, {{"quotients", quotients_json(cf)}, {"convergents", conv}, {"determinants", dets}, {"partial_sums", s}});
}

void cmd_odd_liouville(const Options& o, const Given& g, std::ostream& out) {
  require_json(o, "odd-liouville");
  const ContinuedFraction cf = constructed_cf(o, g);
  const std::size_t ell = g.has(g.ell) ? static_cast<std::size_t>(o.ell) : seed_quotients(o).size();
  PrecisionScope scope(std::max(o.bits, cf.required_bits()));
  Json wit = Json::array();
  bool ok = true;
  for (std::size_t k = ell; k < cf.depth(); ++k) {
    const bool holds = odd_witness_holds(cf, k), odd = cf.q(k) % 2 == 1;
    ok = ok && holds && odd;
    wit.push_back({{"k", k}, {"q_k", cf.q(k).str()}, {"q_k_odd", odd}, {"holds", holds}});
  }
  emit(out, {{"quotients", quotients_json(cf)},
             {"omega", dec(cf.value())},
             {"required_bits", cf.required_bits()},
             {"witnesses", wit}});
  require(ok, "odd super-Liouville witness failed");
}

PlanarPoly default_area_jet(const Options& o, int N) {
  Real omega;
  {
    PrecisionScope hi(o.bits + 64);
    omega = Omega::parse(o.omega).value;
  }
  PlanarPolyMap m;
  m.then(rational_rotation(omega));
  m.then(ShearFactor{Rational(1), Rational(2), Rational(1, 5), o.odd ? 3 : 2});
  if (!o.odd) m.then(ShearFactor{Rational(1), Rational(-1), Rational(1, 3), 1});
  return m.jet(N);
}

void cmd_jet_extend(const Options& o, const Given& g, std::ostream& out) {
  require_json(o, "jet-extend");
  PlanarPoly J;
  int N = o.order;
  if (!o.input.empty()) {
    const Json j = read_json(o.input);
    J = planar_poly_from_json(j);
    if (!g.has(g.order)) N = j.contains("order") ? j.at("order").get<int>() : J.degree();
  } else {
    if (!g.has(g.order)) N = 4;
    J = default_area_jet(o, N);
  }
  const ExtendedJet E = extend_jet(J, N, o.odd);
  const AreaCertificate cert = certify_area_preserving(E.map);
  const PlanarPoly jet = E.map.jet(N);
  const bool matches = jet.X == J.X.truncated(N) && jet.Y == J.Y.truncated(N);
  Json cj{{"factors_unimodular", cert.factors_unimodular},
          {"points_checked", cert.points_checked},
          {"points_unimodular", cert.points_unimodular},
          {"holds", cert.holds()}};
  cj["expanded_unimodular"] = cert.expanded_unimodular ? Json(*cert.expanded_unimodular) : Json();
  emit(out, {{"order", N},
             {"odd", E.map.odd()},
             {"factors", to_json(E.map)},
             {"shears_per_degree", E.shears_per_degree},
             {"degree_bound", E.map.degree_bound()},
             {"jet", to_json(jet, N)},
             {"jet_matches", matches},
             {"certificate", cj}});
  require(matches && cert.holds(), "extended map fails its jet or area certificate");
}

enum class ExampleKind { siegel, tau, odd };

void cmd_example(ExampleKind kind, const Options& o, const Given& g, std::ostream& out) {
  const ContinuedFraction cf = constructed_cf(o, g);
  const Omega omega = Omega::from_cf(cf);
  const DiffeoJet jet = o.input.empty() ? DiffeoJet::rotation(omega, 2) : diffeo_from_json(read_json(o.input), omega.text);
  DivergentExample ex;
  switch (kind) {
    case ExampleKind::siegel: ex = siegel_divergent(omega, jet, o.p, o.bits); break;
    case ExampleKind::tau: ex = tau_divergent(omega, o.p, o.bits); break;
    case ExampleKind::odd: ex = odd_siegel_divergent(omega, jet, o.p, o.bits); break;
  }
  bool ok = !ex.witnesses.empty();
  for (const auto& w : ex.witnesses) ok = ok && w.holds;
  if (o.format == "csv") {
    out << "p,n,coefficient,value,bound,holds\n";
    for (const auto& w : ex.witnesses)
      out << w.p << ',' << w.n << ',' << w.coefficient << ',' << dec(w.value) << ',' << dec(w.bound) << ','
          << (w.holds ? "true" : "false") << '\n';
  } else {
    require_json(o, "example");
    Json wit = Json::array();
    for (const auto& w : ex.witnesses) wit.push_back(json_of(w));
    Json j{{"omega", omega.text},
           {"precision_bits", ex.precision_bits},
           {"order", ex.order},
           {"residual", dec(ex.residual)},
           {"witnesses", wit}};
    j["stopped"] = ex.stopped ? Json(*ex.stopped) : Json();
    j["F"] = to_json(ex.F);
    emit(out, j);
  }
  require(ok, "divergence inequality failed");
}

void cmd_example_classic(const Options& o, const Given&, std::ostream& out) {
  require_json(o, "example-classic");
  const ClassicKind kind = parse_classic_kind(o.kind);
  const Omega omega = Omega::parse(o.omega);
  const DiffeoJet F = classic_map(omega, kind, o.d, o.order);
  const Real tol = tolerance(o);
  const Conservativity c = is_formally_conservative(F, o.order, tol);
  const Linearization lin = linearize_holomorphic(F, o.order);
  Json j{{"kind", o.kind},
         {"F", to_json(F)},
         {"Gamma_deviation", dec(c.deviation)},
         {"linearization_residual", dec(lin.residual)},
         {"h", to_json(lin.h)}};
  if (o.order >= 4) j["h_growth"] = json_of(growth_profile(lin.h));
  if (kind == ClassicKind::corge || kind == ClassicKind::geyer)
    j["covering_residual"] = dec(covering_identity_check(omega, o.d, o.order));
  emit(out, j);
  require(c.deviation <= tol && lin.residual <= tol, "classic map is not conservative within --tol");
}

std::vector<IpmTarget> parse_targets(const std::string& s) {
  if (s == "all") return all_ipm_targets();
  std::vector<IpmTarget> t;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) t.push_back(parse_ipm_target(item));
  if (t.empty()) throw std::invalid_argument("--targets is empty");
  return t;
}

void cmd_ipm_check(const Options& o, const Given& g, std::ostream& out) {
  const auto targets = parse_targets(o.targets);
  const Real tol = tolerance(o);
  std::vector<std::pair<DiffeoJet, DiffeoJet>> families;
  if (!o.input.empty()) {
    const Json j = read_json(o.input);
    if (!j.is_object() || !j.contains("F0") || !j.contains("F1"))
      throw std::invalid_argument("ipm-check input needs \"F0\" and \"F1\"");
    const std::string om = g.has(g.omega) ? o.omega : "";
    DiffeoJet F0 = diffeo_from_json(j.at("F0"), om), F1 = diffeo_from_json(j.at("F1"), om);
    families.emplace_back(F0.with_order(o.order), F1.with_order(o.order));
  } else {
    std::mt19937_64 rng(o.seed);
    const Omega omega = Omega::parse(o.omega);
    for (int i = 0; i < o.samples; ++i) {
      DiffeoJet F0 = random_diffeo(omega, o.order, o.max_degree, rng);
      DiffeoJet F1 = random_diffeo(omega, o.order, o.max_degree, rng);
      families.emplace_back(std::move(F0), std::move(F1));
    }
  }
  const bool csv = o.format == "csv";
  if (!csv) require_json(o, "ipm-check");
  if (csv) out << "family,target,coefficient,degree_bound,residual,within_bound,fits_next\n";
  Json fams = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < families.size(); ++i) {
    const IpmReport rep = ipm_degree_check(families[i].first, families[i].second, o.order, targets, tol);
    ok = ok && rep.all_within();
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
      const std::string next = r.fits_next ? (*r.fits_next ? "true" : "false") : "";
      if (csv)
        out << i << ',' << to_string(r.target) << ',' << r.coefficient << ',' << r.degree_bound << ','
            << dec(r.residual) << ',' << (r.within_bound ? "true" : "false") << ',' << next << '\n';
      Json row{{"target", to_string(r.target)},
               {"coefficient", r.coefficient},
               {"degree_bound", r.degree_bound},
               {"residual", dec(r.residual)},
               {"within_bound", r.within_bound}};
      row["fits_next"] = r.fits_next ? Json(*r.fits_next) : Json();
      rows.push_back(std::move(row));
    }
    fams.push_back({{"family", i},
                    {"solves", rep.solves},
                    {"max_residual", dec(rep.max_residual)},
                    {"all_within", rep.all_within()},
                    {"rows", rows}});
  }
  if (!csv) emit(out, {{"order", o.order}, {"tol", dec(tol)}, {"families", fams}});
  require(ok, "some coefficient exceeds its degree bound");
}

void cmd_growth(const Options& o, const Given& g, std::ostream& out) {
  GrowthProfile gp;
  const Json j = o.input.empty() ? Json() : read_json(o.input);
  if (j.is_object() && j.contains("entries")) {
    const std::string vars = j.value("vars", "zw");
    gp = vars == "zw" ? growth_profile(bi_series_from_json(j)) : growth_profile(uni_series_from_json(j));
  } else {
    const DiffeoJet F = load_jet(o, g);
    const Real tol = tolerance(o);
    if (o.series == "Lstar") {
      gp = growth_profile(resonant_free(F, F.order(), false).L);
    } else {
      const Balanced B = balanced(F, F.order(), tol);
      if (o.series == "Lbalanced") gp = growth_profile(B.pair.L);
      else if (o.series == "tau") gp = growth_profile(B.tau.tau);
      else if (o.series == "Gamma") gp = growth_profile(B.pair.Gamma);
      else throw std::invalid_argument("unknown --series " + o.series + " (Lstar, Lbalanced, tau, Gamma)");
    }
  }
  if (o.format == "csv") {
    out << gp.to_csv();
  } else {
    require_json(o, "growth");
    emit(out, json_of(gp));
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  Given given;
  CLI::App app{"Formal geometric normalization of planar maps"};
  app.require_subcommand(1);

  using Handler = std::function<void(const Options&, const Given&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  const auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto* om = sub->add_option("--omega", o.omega, "rotation number: decimal, cf:a,b,c or golden");
    auto* ord = sub->add_option("--order", o.order, "truncation order N")->check(CLI::Range(1, 100000));
    sub->add_option("--precision-bits", o.bits, "working precision in bits")->check(CLI::Range(64u, 1u << 24));
    sub->add_option("--tol", o.tol, "tolerance for reported checks");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", o.seed, "seed for generated maps");
    sub->add_option("--threads", o.threads, "accepted; computations are single-threaded")->check(CLI::PositiveNumber);
    sub->add_option("--input", o.input, "JSON input file, - for stdin");
    sub->add_option("--max-degree", o.max_degree, "degree of generated maps")->check(CLI::Range(2, 1000));
    commands.emplace_back(sub, std::move(h));
    return std::tuple{sub, om, ord};
  };
  std::vector<std::tuple<CLI::App*, CLI::Option*, CLI::Option*>> subs;
  std::vector<std::pair<CLI::App*, std::pair<CLI::Option*, CLI::Option*>>> arith;
  const auto arithmetic_flags = [&](CLI::App* sub) {
    sub->add_option("--seed-cf", o.seed_cf, "seed quotients, e.g. 2,1");
    auto* dp = sub->add_option("--depth", o.depth, "continued-fraction depth")->check(CLI::Range(1, 64));
    auto* el = sub->add_option("--ell", o.ell, "number of seed quotients kept (default: all)")->check(CLI::Range(1, 64));
    arith.emplace_back(sub, std::pair{dp, el});
  };

  subs.push_back(add("admissible", "resonant-free admissible pair (L*, Γ*)", cmd_admissible));
  subs.push_back(add("balanced", "balanced series L_F with Γ_F and τ_F", cmd_balanced));
  {
    auto t = add("involution", "foliation involution τ_F by two independent routes", cmd_involution);
    std::get<0>(t)->add_flag("--appendix-b", o.conjugators, "also run the one-variable involution toolkit");
    subs.push_back(t);
  }
  subs.push_back(add("normalize", "Morse chart Φ and geometric normal form", cmd_normalize));
  subs.push_back(add("verify", "conjugacy residual of the resonant-free pair", cmd_verify));
  subs.push_back(add("linearize", "linearization of a holomorphic map", cmd_linearize));
  subs.push_back(add("conservative", "Γ − Id for the resonant-free pair", cmd_conservative));
  {
    auto t = add("bruno", "convergents and Bruno partial sums", cmd_bruno);
    auto* dp = std::get<0>(t)->add_option("--depth", o.depth, "number of partial sums")->check(CLI::Range(1, 100000));
    arith.emplace_back(std::get<0>(t), std::pair{dp, static_cast<CLI::Option*>(nullptr)});
    subs.push_back(t);
  }
  {
    auto t = add("odd-liouville", "odd super-Liouville continued fraction", cmd_odd_liouville);
    arithmetic_flags(std::get<0>(t));
    subs.push_back(t);
  }
  {
    auto t = add("jet-extend", "polynomial area-preserving extension of an N-jet", cmd_jet_extend);
    std::get<0>(t)->add_flag("--odd", o.odd, "odd extension");
    subs.push_back(t);
  }
  const std::pair<std::string, ExampleKind> example_kinds[] = {
      {"example-siegel", ExampleKind::siegel}, {"example-tau", ExampleKind::tau}, {"example-odd", ExampleKind::odd}};
  for (const auto& [name, kind] : example_kinds) {
    auto t = add(name, "divergent example with its witness inequalities",
                 [kind](const Options& op, const Given& g, std::ostream& os) { cmd_example(kind, op, g, os); });
    arithmetic_flags(std::get<0>(t));
    std::get<0>(t)->add_option("--p", o.p, "number of witnesses")->check(CLI::Range(1, 16));
    subs.push_back(t);
  }
  {
    auto t = add("example-classic", "holomorphic classic map, its linearization and growth", cmd_example_classic);
    std::get<0>(t)->add_option("--kind", o.kind, "yoccoz, geyer, corge or exp");
    std::get<0>(t)->add_option("--d", o.d, "degree parameter")->check(CLI::Range(1, 1000));
    subs.push_back(t);
  }
  {
    auto t = add("ipm-check", "polynomial-in-t degree bounds along affine families", cmd_ipm_check);
    std::get<0>(t)->add_option("--targets", o.targets, "comma list of Lstar, tau, Lbalanced, Gamma, or all");
    std::get<0>(t)->add_option("--samples", o.samples, "number of generated families")->check(CLI::Range(1, 100000));
    subs.push_back(t);
  }
  {
    auto t = add("growth", "coefficient growth profile", cmd_growth);
    std::get<0>(t)->add_option("--series", o.series, "for map input: Lstar, Lbalanced, tau or Gamma");
    subs.push_back(t);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    for (std::size_t i = 0; i < commands.size(); ++i) {
      CLI::App* sub = commands[i].first;
      if (!sub->parsed()) continue;
      given.omega = std::get<1>(subs[i]);
      given.order = std::get<2>(subs[i]);
      for (const auto& [a, flags] : arith)
        if (a == sub) {
          given.depth = flags.first;
          given.ell = flags.second;
        }
      PrecisionScope scope(o.bits);
      commands[i].second(o, given, out);
      return 0;
    }
  } catch (const Failed& e) {
    err << "check failed: " << e.what() << '\n';
    return 2;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << '\n';
    return 2;
  } catch (const CheckError& e) {
    err << "check failed: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace geonf::cli
