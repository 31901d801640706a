#include "doctest.h"
#include "fixtures.hpp"
#include "stabkit/qp.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;

const char* cli_path() { return std::getenv("STABKIT_CLI"); }

struct RunResult {
  int code = -1;
  std::string out;
};

// run the CLI with stdout captured and stderr discarded
RunResult run(const std::string& args) {
  static int seq = 0;
  fs::path tmp = fs::temp_directory_path() / ("stabkit_cli_" + std::to_string(++seq) + ".out");
  std::string cmd = std::string(cli_path()) + " " + args + " > " + tmp.string() + " 2>/dev/null";
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(tmp);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  fs::remove(tmp);
  return r;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << text;
  return p;
}

}  // namespace

TEST_CASE("CLI end-to-end") {
  REQUIRE_MESSAGE(cli_path() != nullptr, "STABKIT_CLI must point at the built binary");

  auto a3 = write_temp("cli_a3.json", stabkit::qp::to_json(fixtures::a3()));

  SUBCASE("mutate reproduces the 3-cycle and round-trips") {
    auto r = run("mutate --in " + a3.string() + " --vertex 2");
    REQUIRE(r.code == 0);
    auto qp = stabkit::qp::qp_from_json(r.out);
    CHECK(stabkit::qp::is_isomorphic(qp, fixtures::three_cycle()));
    // determinism: byte-identical output on a second run
    CHECK(run("mutate --in " + a3.string() + " --vertex 2").out == r.out);
  }

  SUBCASE("exit codes") {
    CHECK(run("mutate --in " + a3.string() + " --vertex 99").code == 1);  // domain error
    CHECK(run("mutate --in " + a3.string()).code == 2);                   // missing flag
    CHECK(run("mutate --in " + a3.string() + " --vertex 2 --bogus").code == 2);
    CHECK(run("--version").code == 0);
    CHECK(run("hn --in nope.json --charge nope.json").code == 1);
  }

  SUBCASE("jacobian") {
    auto cyc = write_temp("cli_3cyc.json", stabkit::qp::to_json(fixtures::three_cycle()));
    auto r = run("jacobian --in " + cyc.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("beta.gamma") != std::string::npos);
  }

  SUBCASE("ginzburg") {
    auto r = run("ginzburg --in " + a3.string() + " --n 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"degree\": -2") != std::string::npos);
  }

  SUBCASE("hn prints class;phase rows") {
    std::string rep = R"({"qp":)" + stabkit::qp::to_json(fixtures::a2()) +
                      R"(,"p":2,"dim":[1,1],"mats":{"a":[[1]]}})";
    auto repf = write_temp("cli_rep.json", rep);
    auto zf = write_temp("cli_z.json",
                         R"({"backend":"exact","Z":[{"re":"0","im":"1"},{"re":"-1","im":"1"}]})");
    auto r = run("hn --in " + repf.string() + " --charge " + zf.string());
    REQUIRE(r.code == 0);
    CHECK(r.out == "0,1;0.75\n1,0;0.5\n");
    auto rf = run("hn --in " + repf.string() + " --charge " + zf.string() + " --backend float");
    CHECK(rf.out == r.out);
  }

  SUBCASE("exchange-graph") {
    std::string heart = R"({"qp":)" + stabkit::qp::to_json(fixtures::a2()) +
                        R"(,"classes":[[1,0],[0,1]]})";
    auto hf = write_temp("cli_heart.json", heart);
    auto r = run("exchange-graph --seed " + hf.string() + " --intermediate-only");
    REQUIRE(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') >= 5);
    CHECK(r.out.find("digraph") != std::string::npos);
    // depthless unfiltered traversal is refused as a usage error
    CHECK(run("exchange-graph --seed " + hf.string()).code == 2);
  }

  SUBCASE("chamber") {
    CHECK(run("chamber --imz1 1 --imz2 1").out == "H0\n");
    CHECK(run("chamber --imz1 -1 --imz2 2").out == "H1\n");
    CHECK(run("chamber --imz1 1 --imz2 0").out == "wall:S2\n");
    CHECK(run("chamber --imz1 0.5 --imz2 -0.5").out == "wall:E\n");
  }

  SUBCASE("metric") {
    auto pf = write_temp("cli_probe.json", R"({"entries":[
      {"cls":[1,0],"s1":{"phi_plus":0.5,"phi_minus":0.5,"mass":1.0},
                   "s2":{"phi_plus":2.5,"phi_minus":2.5,"mass":1.0}}]})");
    auto r = run("metric --probe " + pf.string());
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
  }

  SUBCASE("surface subcommands") {
    auto r = run("surface compare --m 5");
    CHECK(r.code == 0);
    CHECK(r.out == "isomorphic: 5-cycle\n");

    auto fg = run("surface flip-graph --m 5");
    CHECK(fg.code == 0);
    CHECK(std::count(fg.out.begin(), fg.out.end(), '-') >= 5);

    auto tf = write_temp("cli_tri.json", R"({"m":5,"arcs":[[0,2],[0,3]]})");
    auto q = run("surface quiver --in " + tf.string());
    REQUIRE(q.code == 0);
    CHECK(stabkit::qp::is_isomorphic(stabkit::qp::qp_from_json(q.out), fixtures::a2()));
  }

  SUBCASE("periods") {
    auto r = run("periods --poly \"z^3-z\"");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# zeroes") != std::string::npos);
    CHECK(r.out.find("blocked") != std::string::npos);
    CHECK(r.out.find("proxy,nongeneric") != std::string::npos);
  }

  SUBCASE("chambers scan determinism across thread counts") {
    auto r1 = run("chambers --mode ab --grid -1:1:4 --grid -1:1:4 --threads 1");
    auto r4 = run("chambers --mode ab --grid -1:1:4 --grid -1:1:4 --threads 4");
    REQUIRE(r1.code == 0);
    CHECK(r1.out == r4.out);
    CHECK(r1.out.find("label,generic_flag") != std::string::npos);

    auto ri = run("chambers --mode impair --grid -1:1:3 --grid -1:1:3");
    REQUIRE(ri.code == 0);
    CHECK(ri.out.find("H0") != std::string::npos);
    CHECK(ri.out.find("wall:S1,S2,E") != std::string::npos);
  }

  SUBCASE("out files re-parse under the corresponding readers") {
    fs::path out = fs::temp_directory_path() / "cli_roundtrip.json";
    auto r = run("mutate --in " + a3.string() + " --vertex 2 --out " + out.string());
    REQUIRE(r.code == 0);
    std::ifstream in(out);
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK_NOTHROW(stabkit::qp::qp_from_json(ss.str()));
    fs::remove(out);
  }

  SUBCASE("tolerance override is bounded below") {
    std::string rep = R"({"qp":)" + stabkit::qp::to_json(fixtures::a2()) +
                      R"(,"p":2,"dim":[1,1],"mats":{"a":[[1]]}})";
    auto repf = write_temp("cli_rep2.json", rep);
    auto zf = write_temp("cli_z2.json",
                         R"({"backend":"exact","Z":[{"re":"0","im":"1"},{"re":"-1","im":"1"}]})");
    CHECK(run("hn --in " + repf.string() + " --charge " + zf.string() + " --tol 1e-30").code == 2);
  }
}
