/*
Copyright (C) 2026 The tdlab Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "tdlab/cli.hpp"

using namespace tdlab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("tdlab-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  fs::path dir_;
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_F(CliTest, VerifyAllJsonReportsDimR) {
  auto r = run({"verify", oracle::fixture("krawtchouk-d2.json"), "--checks", "all", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  auto j = ordered_json::parse(r.out);
  EXPECT_EQ(j["summary"], "pass");
  bool saw = false;
  for (const auto& v : j["verdicts"]) {
    if (v["check"] == "dimensions") {
      EXPECT_EQ(v["details"]["dimR"], 21);
      saw = true;
    }
  }
  EXPECT_TRUE(saw);
}

TEST_F(CliTest, VerifyExitCodes) {
  auto nil = run({"verify", oracle::fixture("nilpotent.json")});
  EXPECT_EQ(nil.code, 1);
  EXPECT_NE(nil.out.find("Diagonalizable"), std::string::npos);
  auto nil_json = run({"verify", oracle::fixture("nilpotent.json"), "--format", "json"});
  EXPECT_EQ(nil_json.code, 1);
  EXPECT_EQ(ordered_json::parse(nil_json.out)["verdicts"][0]["details"]["failures"][0]["axiom"], "Diagonalizable");
  EXPECT_EQ(run({"verify", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"verify", oracle::fixture("d0.json"), "--checks", "bogus"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, EveryFixturePassesAllChecks) {
  for (const auto& name : oracle::accepted_fixtures()) {
    auto r = run({"verify", oracle::fixture(name), "--checks", "all"});
    EXPECT_EQ(r.code, 0) << name << "\n" << r.out;
  }
}

TEST_F(CliTest, CorruptedFixturesAreInputErrors) {
  const auto good = slurp(oracle::fixture("krawtchouk-d2-gf13.json"));
  std::vector<std::string> variants;
  variants.push_back(good.substr(0, good.size() / 2));                     // truncated
  variants.push_back(good + "x");                                           // trailing data
  auto p4 = good;
  p4.replace(p4.find("\"p\": 13"), 7, "\"p\": 14");                           // not prime
  variants.push_back(p4);
  auto big = good;
  big.replace(big.find("[0, 2, 0]"), 9, "[0, 13, 0]");                      // entry out of field
  variants.push_back(big);
  auto shape = good;
  shape.replace(shape.find("\"n\": 3"), 6, "\"n\": 4");                       // grid does not match n
  variants.push_back(shape);
  variants.push_back("");
  for (std::size_t k = 0; k < variants.size(); ++k) {
    const auto p = write("bad" + std::to_string(k) + ".json", variants[k]);
    auto r = run({"verify", p});
    EXPECT_EQ(r.code, 2) << "variant " << k << ": " << r.out;
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run({"orbit", p}).code, 2);
    EXPECT_EQ(run({"dims", p}).code, 2);
  }
}

TEST_F(CliTest, OutputIsDeterministic) {
  for (const char* name : {"split-d3.json", "krawtchouk-d3-gf101.json"}) {
    auto a = run({"verify", oracle::fixture(name), "--checks", "all", "--format", "json"});
    auto b = run({"verify", oracle::fixture(name), "--checks", "all", "--format", "json"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run({"orbit", oracle::fixture(name)}).out, run({"orbit", oracle::fixture(name)}).out);
  }
}

TEST_F(CliTest, OrbitExamples) {
  auto p = run({"orbit", oracle::fixture("dim1-pauli.json"), "--format", "json"});
  EXPECT_EQ(p.code, 0);
  auto j = ordered_json::parse(p.out);
  ASSERT_EQ(j["relatives"].size(), 8u);
  for (const auto& row : j["relatives"]) EXPECT_EQ(row["accepted"], true);
  EXPECT_EQ(j["relatives"][0]["word"], "1");
  EXPECT_EQ(j["relatives"][7]["word"], "↓⇓*");

  auto z = run({"orbit", oracle::fixture("d0.json"), "--format", "json"});
  EXPECT_EQ(z.code, 0);
  std::set<std::string> distinct;
  for (const auto& row : ordered_json::parse(z.out)["relatives"]) distinct.insert(row["theta"].get<std::string>() + row["thetastar"].get<std::string>());
  EXPECT_LE(distinct.size(), 2u);

  EXPECT_EQ(run({"orbit", oracle::fixture("nilpotent.json")}).code, 1);
  auto text = run({"orbit", oracle::fixture("krawtchouk-d2.json")});
  EXPECT_EQ(std::count(text.out.begin(), text.out.end(), '\n'), 10);
}

TEST_F(CliTest, DimsTable) {
  auto r = run({"dims", oracle::fixture("krawtchouk-d4.json"), "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto j = ordered_json::parse(r.out);
  EXPECT_EQ(j["dimR"], 110);
  EXPECT_EQ(j["codimR"], 15);
  EXPECT_EQ(j["slices"][4]["dimRt"], 24);
  auto text = run({"dims", oracle::fixture("krawtchouk-d2.json")});
  EXPECT_NE(text.out.find("dimR 21"), std::string::npos);
  EXPECT_EQ(run({"dims", oracle::fixture("nilpotent.json")}).code, 1);
}

TEST_F(CliTest, GenerateExamples) {
  auto k3 = run({"generate", "krawtchouk", "--d", "3", "--field", "rational", "-o", path("k3.json")});
  EXPECT_EQ(k3.code, 0) << k3.err;
  EXPECT_EQ(slurp(path("k3.json")), slurp(oracle::fixture("krawtchouk-d3.json")));
  EXPECT_EQ(run({"verify", path("k3.json")}).code, 0);

  EXPECT_EQ(run({"generate", "krawtchouk", "--d", "7", "--field", "prime:13"}).code, 2);
  EXPECT_EQ(run({"generate", "krawtchouk", "--field", "rational"}).code, 2);
  EXPECT_EQ(run({"generate", "krawtchouk", "--d", "2", "--field", "prime:15"}).code, 2);
  EXPECT_EQ(run({"generate", "hahn", "--d", "2"}).code, 2);

  auto s1 = run({"generate", "split", "--theta", "1,-1", "--thetastar", "1,-1", "--phi", "2", "-o", path("s1.json")});
  EXPECT_EQ(s1.code, 0) << s1.err;
  EXPECT_EQ(run({"verify", path("s1.json"), "--checks", "all"}).code, 0);

  auto rejected = run({"generate", "split", "--theta", "3,1,-1,-3", "--thetastar", "3,1,-1,-3", "--phi", "1,1,1", "-o", path("no.json")});
  EXPECT_EQ(rejected.code, 1);
  EXPECT_NE(rejected.err.find("rejected"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("no.json")));

  EXPECT_EQ(run({"generate", "split", "--theta", "1,-1", "--thetastar", "1,-1", "--phi", "0"}).code, 2);
  EXPECT_EQ(run({"generate", "split", "--theta", "1,x", "--thetastar", "1,-1", "--phi", "2"}).code, 2);

  auto stdout_doc = run({"generate", "krawtchouk", "--d", "1", "--label", "dim1-pauli"});
  EXPECT_EQ(stdout_doc.code, 0);
  EXPECT_EQ(load_document(stdout_doc.out).label, "dim1-pauli");
}

TEST_F(CliTest, SplitFixtureRegeneratesByteIdentically) {
  auto r = run({"generate", "split", "--theta", "1,2,4,8", "--thetastar", "1,2,4,8", "--phi", "28,27,7", "--label", "split-d3"});
  ASSERT_EQ(r.code, 0);
  auto frozen = load_document_file(oracle::fixture("split-d3.json"));
  auto fresh = load_document(r.out);
  EXPECT_EQ(fresh.A, frozen.A);
  EXPECT_EQ(fresh.Astar, frozen.Astar);
  EXPECT_EQ(fresh.label, frozen.label);
}
