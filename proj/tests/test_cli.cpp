#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "ordstat/cli.hpp"

using namespace ordstat;

namespace {

nlohmann::json parsed_out(const CliResult& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("stats on named groups") {
  CliResult r = run_cli({"stats", "--named", "alternating", "--n", "5"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("psi = 211") != std::string::npos);
  CHECK(r.out.find("o = 211/60") != std::string::npos);

  CliResult c1 = run_cli({"stats", "--named", "cyclic", "--n", "1"});
  CHECK(c1.exit_code == 0);
  CHECK(c1.out.find("psi = 1") != std::string::npos);
  CHECK(c1.out.find("exponent = 1") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical reports") {
  std::vector<std::string> args{"scan", "--suite", "psi-max", "--max-order", "24",
                                "--output", "json"};
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("json output carries the same exact rationals as the table") {
  CliResult t = run_cli({"stats", "--named", "Q8"});
  CliResult j = run_cli({"stats", "--named", "Q8", "--output", "json"});
  CHECK(t.exit_code == 0);
  CHECK(j.exit_code == 0);
  auto doc = parsed_out(j);
  CHECK(doc.at("quantities").at("o").get<std::string>() == "27/8");
  CHECK(t.out.find("o = 27/8") != std::string::npos);
}

TEST_CASE("json reports match the shipped schema shape") {
  CliResult j = run_cli({"verify-theorem", "--p", "5", "--s", "6", "--c", "1/2",
                         "--symbolic", "--output", "json"});
  CHECK(j.exit_code == 0);
  auto doc = parsed_out(j);
  // required fields of docs/report-schema.json
  CHECK(doc.at("claim").is_string());
  CHECK(doc.at("params").is_object());
  CHECK(doc.at("quantities").is_object());
  CHECK(doc.at("checks").is_array());
  CHECK(doc.at("witnesses").is_array());
  CHECK(doc.at("notes").is_array());
  CHECK(doc.at("passed").is_boolean());
  for (const auto& c : doc.at("checks")) {
    CHECK(c.at("name").is_string());
    CHECK(c.at("pass").is_boolean());
    CHECK(c.at("details").is_string());
  }
  for (const auto& [key, value] : doc.at("quantities").items()) CHECK(value.is_string());
}

TEST_CASE("verify-theorem instance and symbolic modes") {
  CHECK(run_cli({"verify-theorem", "--p", "2", "--s", "3", "--c", "3/2"}).exit_code == 0);
  CHECK(run_cli({"verify-theorem", "--p", "5", "--s", "6", "--c", "1/2", "--symbolic"})
            .exit_code == 0);
  // p without a built-in instance and no --symbolic
  CliResult r = run_cli({"verify-theorem", "--p", "5", "--s", "6", "--c", "1/2"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("--symbolic") != std::string::npos);
}

TEST_CASE("verify-lemma43 in both modes") {
  CHECK(run_cli({"verify-lemma43", "--s", "1"}).exit_code == 0);
  CHECK(run_cli({"verify-lemma43", "--s", "2", "--shell"}).exit_code == 0);
}

TEST_CASE("construct emits the built parameters") {
  CliResult r = run_cli({"construct", "--s", "3", "--output", "json"});
  CHECK(r.exit_code == 0);
  auto doc = parsed_out(r);
  CHECK(doc.at("quantities").at("group_order").get<std::string>() == "32768");
  CHECK(doc.at("quantities").at("rank").get<std::string>() == "4");
}

TEST_CASE("anti-hughes-bound exit codes separate failure kinds") {
  CHECK(run_cli({"anti-hughes-bound", "--p", "5", "--n", "10"}).exit_code == 0);
  CliResult rejected = run_cli({"anti-hughes-bound", "--p", "3", "--n", "4"});
  CHECK(rejected.exit_code == 2);
  CHECK(rejected.err.find("p >= 5") != std::string::npos);
}

TEST_CASE("secretive-check on Q8") {
  CliResult r = run_cli({"secretive-check", "--named", "Q8"});
  CHECK(r.exit_code == 0);
  CliResult fail = run_cli(
      {"secretive-check", "--named", "elementary-abelian", "--p", "2", "--r", "2"});
  CHECK(fail.exit_code == 1);  // a checked claim failed
}

TEST_CASE("family exit code reflects the decay assertion") {
  CHECK(run_cli({"family", "--p", "2", "--s-from", "2", "--s-to", "3"}).exit_code == 0);
  // the squared ratio rises from s = 1 to s = 2, so the strict-decay claim fails
  CHECK(run_cli({"family", "--p", "2", "--s-from", "1", "--s-to", "2"}).exit_code == 1);
}

TEST_CASE("kd command") {
  CliResult r = run_cli({"kd", "--named", "heisenberg-mod-p", "--p", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("k/d = 11/4") != std::string::npos);
}

TEST_CASE("malformed group documents yield exit code 2 with context") {
  std::string path = "bad_group_doc.json";
  {
    std::ofstream f(path);
    f << "{\"type\": \"permutation\", \"degree\": 3, \"generators\": [[1, 2]]";
  }
  CliResult r = run_cli({"stats", "--group", path});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("parse error") != std::string::npos);
  std::remove(path.c_str());

  // well-formed JSON, out-of-range images
  {
    std::ofstream f(path);
    f << R"({"type": "permutation", "degree": 3, "generators": [[0, 1, 2]]})";
  }
  CliResult range = run_cli({"stats", "--group", path});
  CHECK(range.exit_code == 2);
  CHECK(range.err.find("1-based") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("group documents round through the CLI") {
  std::string path = "c6_doc.json";
  {
    std::ofstream f(path);
    f << R"({"type": "permutation", "degree": 6,
             "generators": [[2, 3, 4, 5, 6, 1]]})";
  }
  CliResult r = run_cli({"stats", "--group", path});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("order = 6") != std::string::npos);
  std::remove(path.c_str());

  std::string mat = "c4_mat_doc.json";
  {
    std::ofstream f(mat);
    f << R"({"type": "mod-matrix", "modulus": 4, "dim": 2,
             "generators": [[1, 1, 0, 1]]})";
  }
  CliResult m = run_cli({"stats", "--group", mat});
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("order = 4") != std::string::npos);
  std::remove(mat.c_str());

  std::string sref = "sd_ref_doc.json";
  {
    std::ofstream f(sref);
    f << R"({"type": "semidirect-ref", "s": 1, "rep": )";
    f << R"({
      "p": 2, "dim": 4,
      "generators": [
        [[0,-1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,1,0]],
        [[0,0,-1,0],[0,0,0,1],[1,0,0,0],[0,-1,0,0]]
      ],
      "z_word": [0, 0]
    }})";
  }
  CliResult s = run_cli({"stats", "--group", sref});
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("order = 128") != std::string::npos);
  std::remove(sref.c_str());
}

TEST_CASE("cap overrides forward to the engine") {
  CliResult r = run_cli({"stats", "--named", "cyclic", "--n", "100", "--enum-cap", "50"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("env var caps are honored and flags win") {
  setenv("ORDSTAT_ENUM_CAP", "50", 1);
  CliResult r = run_cli({"stats", "--named", "cyclic", "--n", "100"});
  CHECK(r.exit_code == 2);
  CliResult r2 =
      run_cli({"stats", "--named", "cyclic", "--n", "100", "--enum-cap", "1000"});
  CHECK(r2.exit_code == 0);
  unsetenv("ORDSTAT_ENUM_CAP");
}

TEST_CASE("scan exit codes and usage errors") {
  CHECK(run_cli({"scan", "--suite", "a5", "--max-order", "30"}).exit_code == 0);
  CHECK(run_cli({"scan", "--suite", "bogus"}).exit_code == 2);
  CHECK(run_cli({"nonsense"}).exit_code == 2);
  CHECK(run_cli({"stats"}).exit_code == 2);  // no group selected
  CHECK(run_cli({"stats", "--named", "Q8", "--group", "x.json"}).exit_code == 2);
}
