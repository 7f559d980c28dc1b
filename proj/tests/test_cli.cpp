#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

#include "hgslab/cli.hpp"
#include "hgslab/error.hpp"
#include "hgslab/families.hpp"
#include "hgslab/hgs.hpp"

using namespace hgslab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("valid commands parse") {
  const Command a = parse_command({"hgs", "enumerate", "--group", "metacyclic:7:3:2",
                                   "--type", "cyclic:21"});
  CHECK(a.verb == "hgs");
  CHECK(a.action == "enumerate");
  CHECK(a.get("group") == "metacyclic:7:3:2");
  CHECK(a.get("type") == "cyclic:21");
  CHECK(a.output == OutputMode::kText);

  const Command b = parse_command({"hgs", "rho-orbits", "--group", "dihedral:4", "--json"});
  CHECK(b.action == "rho-orbits");
  CHECK(b.output == OutputMode::kJson);
  CHECK_FALSE(b.has("json"));

  const Command c = parse_command({"verify-paper", "--only", "metacyclic"});
  CHECK(c.verb == "verify-paper");
  CHECK(c.action.empty());
}

TEST_CASE("usage errors name the offending token") {
  auto usage = [](const std::vector<std::string>& args, const std::string& token) {
    try {
      parse_command(args);
      FAIL("accepted a bad command");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kUsage);
      CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring(token));
    }
  };
  usage({"frobnicate"}, "frobnicate");
  usage({"hgs", "list", "--group", "cyclic:4"}, "list");
  usage({"hgs", "enumerate", "--group", "cyclic:4", "--bogus"}, "--bogus");
  usage({"hgs", "enumerate", "--group", "metacyclic:7:3:3"}, "order 6");
  usage({"hgs", "enumerate", "--group", "cyclic:4", "--type", "wat:2"}, "wat");
  usage({"hgs", "enumerate"}, "--group");
  usage({"construct", "induced", "--group", "sym:3"}, "--t");
}

TEST_CASE("exit codes") {
  CHECK(run({"hgs", "enumerate", "--group", "metacyclic:7:3:3"}).code == 1);
  CHECK(run({"nope"}).code == 1);
  // Incomplete catalog at order 16 without a type filter.
  const Run r = run({"hgs", "enumerate", "--group", "cyclic:16"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"brace", "check", "--group", "sym:3", "--structure", "lambda((1 2))"}).code == 2);
  CHECK(run({"hgs", "enumerate", "--group", "cyclic:4"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("JSON reports are versioned and deterministic") {
  const std::vector<std::string> args{"hgs", "rho-orbits", "--group", "dihedral:4", "--json"};
  const Run first = run(args);
  ::setenv("HGSLAB_THREADS", "4", 1);
  const Run second = run(args);
  ::unsetenv("HGSLAB_THREADS");
  CHECK(first.code == 0);
  CHECK(first.out == second.out);

  const auto j = nlohmann::json::parse(first.out);
  CHECK(j["schema"] == "hgslab/rho-orbits/1");
  CHECK(j["version"] == kVersion);
  CHECK(j["group"] == "dihedral:4");
  CHECK(j["command"]["verb"] == "hgs");
  CHECK(j["result"]["structure_count"] == 30);
  CHECK(j["result"]["orbit_count"] == 23);

  ::setenv("HGSLAB_THREADS", "zero", 1);
  CHECK(run(args).code == 1);
  ::unsetenv("HGSLAB_THREADS");
}

TEST_CASE("structure references by generators, hash and orbit id agree") {
  const auto byGen = run_json({"brace", "check", "--group", "dihedral:4", "--structure",
                               "lambda(r)*rho(s); lambda(s)"});
  const std::string hash = byGen["result"]["structure"]["hash"];
  const FiniteGroup g = build_group(GroupSpec::dihedral(4));
  CHECK(hash == dihedral_structure(g, 0).hash());
  CHECK(byGen["result"]["passed"] == true);

  const auto byHash = run_json({"brace", "check", "--group", "dihedral:4", "--structure", hash});
  CHECK(byHash["result"] == byGen["result"]);

  const auto orbits = run_json({"hgs", "rho-orbits", "--group", "dihedral:4"});
  for (const auto& o : orbits["result"]["orbits"]) {
    const auto check = run_json({"brace", "gprime", "--group", "dihedral:4",
                                 "--structure", o["id"].get<std::string>()});
    CHECK(check["result"]["orbit_size"] == o["size"]);
  }
}

TEST_CASE("hgs enumerate with a type filter") {
  const auto j = run_json({"hgs", "enumerate", "--group", "metacyclic:7:3:2", "--type", "cyclic:21"});
  CHECK(j["result"]["count"] == 7);
  CHECK(j["result"]["orbit_count"] == 1);
  CHECK(j["complete"] == true);
}

TEST_CASE("construct commands") {
  const auto fpf = run_json({"construct", "fpf", "--group", "dihedral:4", "--target",
                             "dihedral:4", "--f1", "r=r,s=s", "--f2", "r=s,s=e"});
  CHECK(fpf["result"]["conjugation_transport"] == true);
  const FiniteGroup g = build_group(GroupSpec::dihedral(4));
  CHECK(fpf["result"]["structure"]["hash"] == dihedral_structure(g, 0).hash());
  CHECK(run({"construct", "fpf", "--group", "dihedral:4", "--target", "dihedral:4",
             "--f1", "r=r,s=s", "--f2", "r=r,s=s"}).code == 2);

  const auto maps = run_json({"construct", "abelian-maps", "--group", "sym:3", "--orbits"});
  CHECK(maps["result"]["count"] == 4);
  CHECK(maps["result"]["orbit_sizes"] == std::vector<int>{1, 3});

  const auto induced = run_json({"construct", "induced", "--group", "metacyclic:7:3:2", "--t", "t"});
  CHECK(induced["result"]["count"] == 1);
  CHECK(induced["result"]["structures"][0]["orbit_size"] == 7);
}

TEST_CASE("correspondence with transport") {
  const auto j = run_json({"correspondence", "--group", "metacyclic:7:3:2", "--structure",
                           "lambda(s)*rho(t)", "--transport", "s^2"});
  CHECK(j["result"]["lattice"]["entries"].size() == 4);
  CHECK(j["result"]["transport"]["holds"] == true);
}

TEST_CASE("verify-paper filters by family") {
  const auto j = run_json({"verify-paper", "--only", "dihedral"});
  CHECK(j["result"]["fail"] == 0);
  CHECK(j["result"]["checks"].size() == 4);
  CHECK(run({"verify-paper", "--only", "no-such-check"}).code == 1);
}
