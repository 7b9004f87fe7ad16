// Copyright 2026 The incontest Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"

using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int g_serial = 0;

// Runs the installed binary with stdout/stderr captured to scratch files.
CliResult run_cli(const std::string& args) {
  const std::string tag = "cli_scratch_" + std::to_string(g_serial++);
  const std::string out_path = tag + ".out";
  const std::string err_path = tag + ".err";
  const std::string cmd =
      std::string(CLI_BIN) + " " + args + " >" + out_path + " 2>" + err_path;
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::string fx(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  std::ofstream out(name);
  out << text;
  return name;
}

}  // namespace

TEST_CASE("cli: solve json output") {
  const auto r = run_cli("solve -i " + fx("t2.json") + " -m sosm");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["mechanism"] == "sosm");
  CHECK(j["seats"]["i1"] == "s1");
  CHECK(j["seats"]["i2"] == "s2");
  CHECK(j["seats"]["i3"] == "s3");
  CHECK_FALSE(j.contains("trace"));
}

TEST_CASE("cli: solve table output renders the outside option") {
  const auto r = run_cli("solve -i " + fx("t3.json") + " -m sosm --format table");
  CHECK(r.code == 0);
  CHECK(r.out.find("i1  s1\n") != std::string::npos);
  CHECK(r.out.find("i4  -\n") != std::string::npos);
}

TEST_CASE("cli: solve trace") {
  const auto r = run_cli("solve -i " + fx("t2.json") + " -m boston --trace");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.contains("trace"));
  REQUIRE(!j["trace"].empty());
  for (const auto& ev : j["trace"]) {
    CHECK(ev.contains("round"));
    CHECK(ev.contains("event"));
    CHECK(ev.contains("student"));
    CHECK(ev.contains("school"));
  }
  CHECK(j["trace"][0]["event"] == "propose");
}

TEST_CASE("cli: solve writes to a file") {
  const std::string path = "cli_solve_out.json";
  const auto r = run_cli("solve -i " + fx("t2.json") + " -m ttc -o " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const json j = json::parse(slurp(path));
  CHECK(j["seats"]["i1"] == "s1");
  std::remove(path.c_str());
}

TEST_CASE("cli: audit accepts and rejects") {
  const auto ok = run_cli("audit -i " + fx("t1.json") + " -a " + fx("t1_mu_star.json"));
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["incontestable"] == true);

  const std::string bad = write_temp(
      "cli_audit_bad.json", R"({"seats": {"i1": "s1", "i2": "s3", "i3": "s2"}})");
  const auto fail = run_cli("audit -i " + fx("t2.json") + " -a " + bad);
  CHECK(fail.code == 1);
  const json j = json::parse(fail.out);
  CHECK(j["incontestable"] == false);
  REQUIRE(j["complaints"].size() == 1);
  CHECK(j["complaints"][0]["student"] == "i2");
  CHECK(j["complaints"][0]["kind"] == "top_priority_violation");
  CHECK(j["complaints"][0]["set"] == json::array({"s1", "s2"}));
  std::remove(bad.c_str());
}

TEST_CASE("cli: audit table format") {
  const auto r = run_cli("audit -i " + fx("t1.json") + " -a " + fx("t1_mu_star.json") +
                         " --format table");
  CHECK(r.code == 0);
  CHECK(r.out.find("incontestable  true\n") != std::string::npos);
}

TEST_CASE("cli: attainable matches or flags the prediction") {
  const auto ok =
      run_cli("attainable -i " + fx("t2.json") + " -m sosm --student i2");
  CHECK(ok.code == 0);
  const json j = json::parse(ok.out);
  CHECK(j["match"] == true);
  CHECK(j["outcomes"] == json::array({"s1", "s2"}));
  CHECK(j["predicted"] == json::array({"s1", "s2"}));
  CHECK(!j["witnesses"].empty());

  const auto off =
      run_cli("attainable -i " + fx("t2.json") + " -m boston --student i2");
  CHECK(off.code == 1);
  CHECK(json::parse(off.out)["match"] == false);
}

TEST_CASE("cli: strategy safe") {
  const auto none =
      run_cli("strategy -i " + fx("t3.json") + " --student i3 --safe -k 2");
  CHECK(none.code == 0);
  CHECK(json::parse(none.out)["exists"] == false);

  const auto some =
      run_cli("strategy -i " + fx("t3.json") + " --student i3 --safe -k 3");
  CHECK(some.code == 0);
  const json j = json::parse(some.out);
  CHECK(j["exists"] == true);
  CHECK(j["witness"] == json::array({"s1", "s2", "s3"}));

  const auto brute = run_cli("strategy -i " + fx("t2.json") +
                             " --student i2 --safe -k 2 --brute -m sosm");
  CHECK(brute.code == 0);
  const json b = json::parse(brute.out);
  CHECK(b["exists"] == true);
  CHECK(b["brute_exists"] == true);
  CHECK(b["agrees"] == true);
}

TEST_CASE("cli: strategy dominant") {
  const auto r = run_cli("strategy -i " + fx("t2.json") +
                         " --student i2 --dominant -k 2 --brute -m sosm");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["exists"] == true);
  CHECK(j["strategy"] == json::array({"s1", "s2"}));
  CHECK(j["agrees"] == true);
}

TEST_CASE("cli: strategy maxmin") {
  const auto r =
      run_cli("strategy -i " + fx("t2.json") + " --student i2 --maxmin -m sosm");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["truthful_worst"] == "s2");
  CHECK(j["truth_is_maxmin_optimal"] == true);
}

TEST_CASE("cli: strategy demands exactly one analysis") {
  const auto r = run_cli("strategy -i " + fx("t2.json") + " --student i2");
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("cli: consistency over instance files") {
  const auto r =
      run_cli("consistency -i " + fx("t2.json") + " -i " + fx("t4.json"));
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["problems"] == 2);
  CHECK(j["mechanisms"].size() == 5);
}

TEST_CASE("cli: consistency sampled corpus") {
  const auto r = run_cli("consistency --students 4 --schools 3 --samples 6 --seed 5");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["pass"] == true);
}

TEST_CASE("cli: gen is byte deterministic and round trips") {
  const auto a = run_cli("gen --students 4 --schools 3 --seed 7");
  const auto b = run_cli("gen --students 4 --schools 3 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const std::string path = write_temp("cli_gen_instance.json", a.out);
  const auto solve = run_cli("solve -i " + path + " -m sosm");
  CHECK(solve.code == 0);
  std::remove(path.c_str());
}

TEST_CASE("cli: input errors exit 2") {
  const auto missing = run_cli("solve -i no_such_file.json -m sosm");
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error:") != std::string::npos);

  const std::string mangled = write_temp("cli_mangled.json", "{ not json");
  CHECK(run_cli("solve -i " + mangled + " -m sosm").code == 2);
  std::remove(mangled.c_str());

  const auto noargs = run_cli("solve");
  CHECK(noargs.code == 2);
}

TEST_CASE("cli: mechanism spec errors exit 3") {
  CHECK(run_cli("solve -i " + fx("t2.json") + " -m bogus").code == 3);
  CHECK(run_cli("solve -i " + fx("t2.json") + " -m ar:0").code == 3);
  CHECK(run_cli("solve -i " + fx("t2.json") + " -m sosm@k=2").code == 3);
}

TEST_CASE("cli: budget overruns exit 4") {
  const auto r =
      run_cli("attainable -i " + fx("t1.json") + " -m sosm --student i1 --budget 10");
  CHECK(r.code == 4);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("cli: help exits 0") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("solve --help").code == 0);
}
