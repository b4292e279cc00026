#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "maxties/approximants.hpp"
#include "maxties/cli.hpp"
#include "maxties/maxima_discrete.hpp"

using namespace maxties;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "maxties");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::string field(const Run& r, const std::string& name) {
  const auto lines = split(r.out, '\n');
  const auto header = split(lines.at(0), ',');
  const auto row = split(lines.at(1), ',');
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return row.at(i);
  }
  return "";
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("bound command") {
    const auto t2 = run({"bound", "thm2", "--law", "geometric", "--mu", "100", "--n", "100000"});
    CHECK(t2.code == 0);
    CHECK(field(t2, "bound") == "0.330");

    const auto t1 = run({"bound", "thm1a", "--law", "geometric", "--p", "0.2", "--n", "20", "--format", "json"});
    CHECK(t1.code == 0);
    const auto doc = nlohmann::json::parse(t1.out);
    CHECK(doc["params"]["alpha"].get<double>() == doctest::Approx(0.2).epsilon(1e-10));

    const auto t3 = run({"bound", "thm3", "--law", "uniform", "--b", "1", "--a", "0.1", "--n", "10", "--ell", "1", "--raw"});
    CHECK(t3.code == 0);
    CHECK(std::abs(std::stod(field(t3, "bound")) - 0.561111) <= 1e-6);

    const auto t4 = run({"bound", "thm4", "--n", "10", "--ell", "2", "--eq", "0.1", "--eq2", "0.01", "--raw"});
    CHECK(t4.code == 0);
    CHECK(std::stod(field(t4, "bound")) == doctest::Approx(12.0 / 49.0).epsilon(1e-14));
  }

  TEST_CASE("law descriptors") {
    const auto inline_json =
        run({"bound", "thm1a", "--law", R"({"kind":"tabulated","weights":[0.5,0.5]})", "--n", "2", "--raw"});
    CHECK(inline_json.code == 0);
    CHECK(std::stod(field(inline_json, "bound")) == doctest::Approx(2.1972245773362194).epsilon(1e-13));
    CHECK(std::holds_alternative<ContinuousLaw>(parse_law({{"kind", "gumbel"}})));
    CHECK(std::holds_alternative<DiscreteLaw>(parse_law({{"kind", "geometric"}, {"p", 0.3}})));
    LawFlags flags;
    flags.n = 1000;
    const auto mu = std::get<DiscreteLaw>(parse_law({{"kind", "geometric"}, {"mu", 10.0}}, flags));
    CHECK(mu.pmf(1) == doctest::Approx(0.99).epsilon(1e-15));
  }

  TEST_CASE("exit codes") {
    CHECK(run({"bound", "thm2", "--law", "geometric", "--p", "0.3"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"bound", "thm9", "--n", "4"}).code == kExitUsage);
    CHECK(run({"bound", "thm1a", "--law", "geometric", "--p", "1.5", "--n", "4"}).code == kExitUsage);
    CHECK(run({"bound", "thm1a", "--law", "nope", "--n", "4"}).code == kExitUsage);
    CHECK(run({"bound", "thm1a", "--law", "{bad json", "--n", "4"}).code == kExitUsage);
    CHECK(run({"bound", "thm1a", "--law", "geometric", "--p", "0.2", "--n", "4", "--tol", "-1"}).code == kExitUsage);
    const auto degenerate = run({"bound", "thm1a", "--law", "geometric", "--p", "0.3", "--n", "1"});
    CHECK(degenerate.code == kExitDegenerate);
    CHECK_FALSE(degenerate.err.empty());
    CHECK(run({"bound", "thm4", "--n", "5", "--eq", "0", "--eq2", "0"}).code == kExitDegenerate);
    CHECK(run({"bound", "thm1a", "--law", "geometric", "--p", "0.3", "--n", "10", "--tol", "1e-320"}).code ==
          kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
  }

  TEST_CASE("table1") {
    const auto t = run({"table1"});
    CHECK(t.code == 0);
    const auto lines = split(t.out, '\n');
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "mu,100000,1000000,10000000,100000000,1000000000");
    CHECK(split(lines[1], ',')[1] == "0.330");
    CHECK(split(lines[5], ',')[5] == "0.039");
    CHECK(split(lines[4], ',')[1] == "---");
    CHECK(lines[2] == "300,---,0.283,0.094,0.062,0.058");
    CHECK(t.out.find('\r') == std::string::npos);
    CHECK(run({"table1"}).out == t.out);
    CHECK(run({"table1", "--workers", "3"}).out == t.out);
  }

  TEST_CASE("figures") {
    const auto f1 = run({"figure", "fig1", "--points", "7", "--min", "0.1", "--max", "0.7"});
    CHECK(f1.code == 0);
    const auto lines = split(f1.out, '\n');
    CHECK(lines.size() == 8);
    CHECK(lines[0] == "p,thm1a_bound");
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto cols = split(lines[i], ',');
      const double p = std::stod(cols[0]);
      const double bound = std::stod(cols[1]);
      const KnSpec spec(make_geometric(p), 20);
      CHECK(bound >= tv_distance(kn_full_pmf(spec), logarithmic_law(p)).hi);
    }
    const auto f2 = run({"figure", "fig2", "--points", "21", "--max", "1"});
    CHECK(f2.code == 0);
    const auto rows = split(f2.out, '\n');
    CHECK(rows[0] == "a,bound_n20,bound_n100");
    CHECK(rows[1] == "0,0,0");
    double prev20 = -1;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double b = std::stod(split(rows[i], ',')[1]);
      CHECK(b > prev20);
      prev20 = b;
    }
  }

  TEST_CASE("verify") {
    const auto ok = run({"verify", "--mc-samples", "0"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("fail") == std::string::npos);
    CHECK(ok.out.find("_mc") == std::string::npos);
    const auto faulty = run({"verify", "--mc-samples", "0", "--inject-fault", "0.5"});
    CHECK(faulty.code == kExitVerifyFailed);
    CHECK(faulty.out.find(",fail") != std::string::npos);
    const auto mc = run({"verify", "--mc-samples", "2000", "--seed", "3"});
    CHECK(mc.code == kExitOk);
    CHECK(mc.out.find("thm1a_mc") != std::string::npos);
    CHECK(run({"verify", "--mc-samples", "2000", "--seed", "3"}).out == mc.out);
  }

  TEST_CASE("simulate and seeds") {
    const auto a = run({"simulate", "kn", "--law", "geometric", "--p", "0.3", "--n", "10", "--mc-samples", "5000",
                        "--seed", "17"});
    CHECK(a.code == 0);
    CHECK(split(a.out, '\n')[0] == "k,count,frequency");
    setenv(kSeedEnvVar, "17", 1);
    const auto b = run({"simulate", "kn", "--law", "geometric", "--p", "0.3", "--n", "10", "--mc-samples", "5000"});
    unsetenv(kSeedEnvVar);
    CHECK(a.out == b.out);
    const auto al = run({"simulate", "kn_al", "--law", "gumbel", "--n", "20", "--ell", "2", "--a", "0.5",
                         "--mc-samples", "1000", "--format", "json"});
    CHECK(al.code == 0);
    CHECK(nlohmann::json::parse(al.out)["samples"].get<int>() == 1000);
    CHECK(run({"simulate", "kn_al", "--law", "geometric", "--p", "0.3", "--n", "5", "--a", "1"}).code == kExitUsage);
  }
}
