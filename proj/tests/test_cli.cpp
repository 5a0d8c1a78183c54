#include <doctest.h>

#include "geonf/cli.hpp"
#include "geonf/real.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "geonf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = geonf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(GEONF_TEST_DATA) + "/" + name; }

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("usage errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"no-such-command"}).code == 1);
    CHECK(run({"verify", "--format", "xml"}).code == 1);
    CHECK(run({"verify", "--order", "0"}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("input files") {
    const Result ok = run({"verify", "--input", data("rotation.json")});
    CHECK(ok.code == 0);
    CHECK(geonf::parse_real(parse(ok).at("residual").get<std::string>()) <= geonf::Real("1e-70"));

    const Result bad = run({"verify", "--input", data("malformed.json")});
    CHECK(bad.code == 1);
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"verify", "--input", data("missing.json")}).code == 1);
  }

  TEST_CASE("guard failures exit 2") {
    const Result r = run({"admissible", "--omega", "0.5", "--order", "6"});
    CHECK(r.code == 2);
    CHECK(r.err.find("guard") != std::string::npos);
  }

  TEST_CASE("generated maps are deterministic in the seed") {
    const Result a = run({"admissible", "--order", "6", "--seed", "3"});
    const Result b = run({"admissible", "--order", "6", "--seed", "3"});
    const Result c = run({"admissible", "--order", "6", "--seed", "4"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
  }

  TEST_CASE("every subcommand runs with small defaults") {
    const std::vector<std::vector<std::string>> cmds{
        {"admissible", "--order", "6"},
        {"balanced", "--order", "6"},
        {"involution", "--order", "7", "--appendix-b"},
        {"normalize", "--order", "6"},
        {"verify", "--order", "6"},
        {"linearize", "--order", "6", "--input", data("rotation.json")},
        {"conservative", "--order", "6", "--input", data("rotation.json")},
        {"bruno", "--depth", "5"},
        {"odd-liouville"},
        {"jet-extend"},
        {"jet-extend", "--odd", "--order", "5"},
        {"example-siegel"},
        {"example-tau"},
        {"example-classic", "--kind", "geyer", "--d", "2", "--order", "8"},
        {"ipm-check", "--order", "4", "--targets", "Lstar,Gamma"},
        {"growth", "--order", "8", "--series", "Lstar"},
    };
    for (const auto& c : cmds) {
      CAPTURE(c.front());
      const Result r = run(c);
      CHECK(r.code == 0);
      CHECK_NOTHROW(parse(r));
    }
  }

  TEST_CASE("CSV output") {
    const Result b = run({"bruno", "--omega", "golden", "--depth", "3", "--format", "csv"});
    REQUIRE(b.code == 0);
    CHECK(b.out.rfind("K,S_K\n", 0) == 0);
    const Result g = run({"growth", "--order", "8", "--format", "csv"});
    REQUIRE(g.code == 0);
    CHECK(g.out.rfind("n,max_abs,nth_root\n", 0) == 0);
    const Result e = run({"example-siegel", "--format", "csv"});
    REQUIRE(e.code == 0);
    CHECK(e.out.rfind("p,n,coefficient,value,bound,holds\n", 0) == 0);
  }

  TEST_CASE("reported values") {
    const auto j = parse(run({"bruno", "--omega", "cf:2,1,42", "--depth", "2"}));
    CHECK(j.dump().find("128") != std::string::npos);
    const auto s = parse(run({"example-siegel"}));
    for (const auto& w : s.at("witnesses")) CHECK(w.at("holds").get<bool>());
    CHECK(run({"growth", "--order", "3"}).code == 1);
  }
}
