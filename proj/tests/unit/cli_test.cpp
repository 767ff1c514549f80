// Copyright 2026 The charplane Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "charplane/cli/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "generators.hpp"

namespace charplane::cli {
namespace {

namespace fs = std::filesystem;

RunResult invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "charplane");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::string help;
  try {
    const auto spec = parse_args(static_cast<int>(argv.size()), argv.data(), &help);
    if (!spec) return RunResult{kExitOk, help, ""};
    return run(*spec);
  } catch (const UsageError& e) {
    return RunResult{kExitInputError, "", e.what()};
  }
}

std::vector<Json> records(const std::string& out) {
  std::vector<Json> v;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) v.push_back(Json::parse(line));
  return v;
}

Json single(const std::vector<std::string>& args) {
  const RunResult r = invoke(args);
  EXPECT_EQ(r.exit_code, kExitOk) << r.err;
  const auto v = records(r.out);
  EXPECT_EQ(v.size(), 1u);
  return v.empty() ? Json() : v.front();
}

const Json* criterion(const Json& rec, const std::string& name) {
  for (const auto& c : rec["criteria"]) {
    if (c["name"] == name) return &c;
  }
  return nullptr;
}

fs::path temp_file(const std::string& name, const std::string& body) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p, std::ios::binary) << body;
  return p;
}

constexpr const char* kTwoPair = "(y^2+x^3)^2+x^5*y";

TEST(Invariants, PrimeFamilyAtFive) {
  const Json j = single({"invariants", "-p", "5", "x^7+y^6+x^6*y"});
  EXPECT_EQ(j["schema"], kSchemaVersion);
  EXPECT_EQ(j["report"]["mu"], "30");
  EXPECT_EQ(j["report"]["holds"], "true");
}

TEST(Invariants, Node) {
  const Json j = single({"invariants", "-p", "0", "x*y"});
  EXPECT_EQ(j["report"]["mu"], "1");
  EXPECT_EQ(j["report"]["delta"], "1");
  EXPECT_EQ(j["report"]["r"], "2");
}

TEST(Invariants, InfiniteMilnorNumber) {
  const Json j = single({"invariants", "-p", "2", kTwoPair});
  EXPECT_EQ(j["report"]["mu"], "INF");
  EXPECT_EQ(j["report"]["holds"], "indeterminate");
}

TEST(Invariants, KeyOrderIsFixed) {
  const Json j = single({"invariants", "-p", "0", "x*y"});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  const std::vector<std::string> expected = {"schema", "command", "input",  "status",   "error", "report", "field_tower",
                                             "direct", "criteria", "polar", "merle", "inconsistencies", "timings"};
  EXPECT_EQ(keys, expected);
}

TEST(Tame, UntameAtThirteen) {
  const Json j = single({"tame", "-p", "13", kTwoPair});
  EXPECT_EQ(j["direct"]["verdict"], "false");
  const Json* s = criterion(j, "SEMIGROUP");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ((*s)["verdict"], "false");
  EXPECT_NE((*s)["witness"].get<std::string>().find("beta_2 = 13 = 0 mod 13"), std::string::npos);
}

TEST(Tame, TameAtSeven) {
  const Json j = single({"tame", "-p", "7", kTwoPair});
  EXPECT_EQ(j["direct"]["verdict"], "true");
  EXPECT_EQ((*criterion(j, "SEMIGROUP"))["verdict"], "true");
  EXPECT_EQ(j["inconsistencies"].size(), 0u);
}

TEST(Tame, VanishingPartial) {
  const Json j = single({"tame", "-p", "3", "x^2+y^3"});
  EXPECT_EQ(j["report"]["mu"], "INF");
  EXPECT_EQ(j["direct"]["verdict"], "false");
  const Json* sqh = criterion(j, "SQH");
  ASSERT_NE(sqh, nullptr);
  EXPECT_NE((*sqh)["verdict"], "true");
}

TEST(Tame, TableOutput) {
  const RunResult r = invoke({"tame", "-p", "7", kTwoPair, "--table"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.out.find("DIRECT"), std::string::npos);
  EXPECT_NE(r.out.find("<4,6,13>"), std::string::npos);
}

TEST(Sweep, TwoPairBranch) {
  const RunResult r = invoke({"sweep", "--primes", "2,3,5,7,11,13,17", kTwoPair});
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  const auto v = records(r.out);
  ASSERT_EQ(v.size(), 8u);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(v[i]["command"], "sweep");
  EXPECT_EQ(v[0]["input"]["p"], "2");
  EXPECT_EQ(v[6]["input"]["p"], "17");
  const Json& s = v.back()["summary"];
  EXPECT_EQ(s["tame"], Json::array({"5", "7", "11", "17"}));
  EXPECT_EQ(s["untame"], Json::array({"2", "3", "13"}));
}

TEST(Sweep, TemplateFamily) {
  const RunResult r = invoke({"sweep", "--primes", "3,5,7", "--template", "milnor-example"});
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  const auto v = records(r.out);
  ASSERT_EQ(v.size(), 4u);
  for (std::uint64_t i = 0; i < 3; ++i) {
    const std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7}[i];
    EXPECT_EQ(v[i]["report"]["mu"], std::to_string(p * (p + 1)));
  }
}

TEST(Sweep, Node) {
  const auto v = records(invoke({"sweep", "--primes", "5", "x*y"}).out);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v.back()["summary"]["tame"], Json::array({"5"}));
}

TEST(Sweep, ErrorsStayPerPrime) {
  const RunResult r = invoke({"sweep", "--primes", "2,5", "x^2+y^2"});
  const auto v = records(r.out);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0]["status"], "error");
  EXPECT_EQ(v[1]["status"], "ok");
}

TEST(Corpus, WorkedExamples) {
  const RunResult r = invoke({"corpus", "-i", std::string(CHARPLANE_TEST_DATA_DIR) + "/worked_examples.txt"});
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  const auto v = records(r.out);
  ASSERT_EQ(v.size(), 5u);
  const Json& a = v.back()["audit"];
  EXPECT_EQ(a["lines"], "4");
  EXPECT_EQ(a["errors"], "0");
  EXPECT_EQ(a["milnor_bound_violations"], "0");
  EXPECT_EQ(a["criterion_inconsistencies"], "0");
  EXPECT_EQ(v[0]["report"]["mu"], "INF");
  EXPECT_NE(v[1]["report"]["mu"], "INF");
  EXPECT_EQ(v[3]["input"]["p"], "7");
}

TEST(Corpus, EmptyFile) {
  const fs::path p = temp_file("charplane_empty.txt", "");
  const auto v = records(invoke({"corpus", "-i", p.string()}).out);
  ASSERT_EQ(v.size(), 1u);
  for (const auto& [k, value] : v.front()["audit"].items()) EXPECT_EQ(value, "0") << k;
}

TEST(Corpus, NewtonNondegenerateAtSeven) {
  testing::Generator gen(testing::kCorpusSeed + 7);
  std::string body = "@p=7\n";
  for (int i = 0; i < 100; ++i) body += gen.newton_nondegenerate(7).text() + "\n";
  const fs::path p = temp_file("charplane_nnd.txt", body);
  const auto v = records(invoke({"corpus", "-i", p.string()}).out);
  ASSERT_EQ(v.size(), 101u);
  const Json& a = v.back()["audit"];
  EXPECT_EQ(a["lines"], "100");
  EXPECT_EQ(a["milnor_bound_violations"], "0");
  EXPECT_EQ(a["criterion_inconsistencies"], "0");
}

TEST(Corpus, BadLinesAreIsolated) {
  const fs::path p = temp_file("charplane_bad.txt", "x*y+\ny^2\nx*y @p=3\n");
  const auto v = records(invoke({"corpus", "-i", p.string()}).out);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0]["status"], "error");
  EXPECT_EQ(v[1]["status"], "error");
  EXPECT_EQ(v[2]["status"], "ok");
  EXPECT_EQ(v.back()["audit"]["errors"], "2");
}

TEST(Teissier, LineConvention) {
  const Json j = single({"teissier", "-p", "5", "--line", "1,0", "x^7+y^6+x^6*y"});
  EXPECT_EQ(j["polar"]["i0_f_l"], "7");
  const RunResult r = invoke({"teissier", "-p", "5", "--line", "0,1", "x^7+y^6+x^6*y"});
  EXPECT_EQ(r.exit_code, kExitHypothesisFailed);
  EXPECT_EQ(records(r.out).front()["status"], "hypothesis_failed");
}

TEST(Merle, Bundles) {
  const Json j = single({"merle", "-p", "7", kTwoPair});
  ASSERT_TRUE(j["merle"].is_object());
  const RunResult r = invoke({"merle", "-p", "7", "x*y"});
  EXPECT_EQ(r.exit_code, kExitHypothesisFailed);
}

TEST(ExitCodes, InputErrors) {
  EXPECT_EQ(invoke({"invariants", "-p", "0", "x*y+"}).exit_code, kExitInputError);
  EXPECT_EQ(invoke({"invariants", "-p", "0", "y^2"}).exit_code, kExitInputError);
  EXPECT_EQ(invoke({"invariants", "-p", "4", "x*y"}).exit_code, kExitInputError);
  EXPECT_EQ(invoke({"invariants", "-p", "5", "--weights", "0,1", "x*y"}).exit_code, kExitInputError);
  EXPECT_EQ(invoke({"sweep", "--primes", "5,6", "x*y"}).exit_code, kExitInputError);
  EXPECT_EQ(invoke({"corpus", "-i", "/nonexistent/charplane.txt"}).exit_code, kExitInputError);
  EXPECT_EQ(invoke({"sweep", "--primes", "5", "--template", "no-such-family"}).exit_code, kExitInputError);
}

TEST(Serialization, RoundTripIsByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"tame", "-p", "13", kTwoPair},
           {"teissier", "-p", "5", "--line", "1,0", "x^7+y^6+x^6*y"},
           {"merle", "-p", "7", kTwoPair},
           {"sweep", "--primes", "2,5", kTwoPair}}) {
    std::istringstream in(invoke(args).out);
    std::string line;
    while (std::getline(in, line)) EXPECT_EQ(Json::parse(line).dump(), line);
  }
}

TEST(Serialization, DeterministicApartFromTimings) {
  const std::vector<std::string> args = {"tame", "-p", "11", kTwoPair};
  Json a = single(args), b = single(args);
  a.erase("timings");
  b.erase("timings");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Serialization, NumbersAreStrings) {
  const Json j = single({"tame", "-p", "7", kTwoPair});
  std::function<void(const Json&)> walk = [&](const Json& v) {
    EXPECT_FALSE(v.is_number()) << v.dump();
    if (v.is_structured()) {
      for (const auto& [k, c] : v.items()) walk(c);
    }
  };
  walk(j);
}

TEST(Args, Placeholders) {
  EXPECT_EQ(expand_placeholders("x^{p+2}+y^{p-1}+x^{p}", 5), "x^7+y^4+x^5");
  EXPECT_EQ(parse_uint_list("2,3, 5"), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_THROW(parse_uint_list("2,x"), UsageError);
  EXPECT_THROW(template_text("no-such-family"), UsageError);
}

TEST(Args, OutputFile) {
  const fs::path out = fs::temp_directory_path() / "charplane_out.json";
  fs::remove(out);
  const std::vector<std::string> args = {"charplane", "invariants", "-p", "0", "x*y", "-o", out.string()};
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  EXPECT_EQ(main_entry(static_cast<int>(argv.size()), argv.data()), kExitOk);
  std::ifstream in(out);
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(Json::parse(line)["report"]["mu"], "1");
}

TEST(Args, Help) {
  const RunResult r = invoke({"--help"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.out.find("invariants"), std::string::npos);
}

}  // namespace
}  // namespace charplane::cli
