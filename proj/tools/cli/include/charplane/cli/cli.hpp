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

#ifndef CHARPLANE_CLI_CLI_HPP
#define CHARPLANE_CLI_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "charplane/charplane.hpp"

namespace charplane::cli {

inline constexpr const char* kSchemaVersion = "charplane/1";

enum class Command { Invariants, Tame, Sweep, Corpus, Merle, Teissier };

std::string_view to_string(Command c) noexcept;

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitHypothesisFailed = 2 };

struct JobSpec {
  Command command = Command::Invariants;
  std::string poly_text;
  std::uint64_t characteristic = 0;
  std::optional<Weight> weights;
  std::optional<std::pair<long, long>> line;  ///< (a, b) for l = -b*x + a*y
  std::vector<std::uint64_t> primes;
  std::optional<std::string> template_name;
  std::optional<std::string> input_path;
  std::optional<std::string> output_path;
  bool table = false;
};

/// Everything a run prints; `out` goes to stdout or the -o file, `err` to stderr.
struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Thrown for malformed command lines and option values.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses argv into a JobSpec. Returns nullopt and fills `help` when --help was given.
std::optional<JobSpec> parse_args(int argc, const char* const* argv, std::string* help);
std::vector<std::uint64_t> parse_uint_list(const std::string& text);

/// Replaces each `{p}`, `{p+k}`, `{p-k}` in `text` with the value for prime p.
std::string expand_placeholders(const std::string& text, std::uint64_t p);
/// Built-in per-prime families; throws UsageError for unknown names.
std::string template_text(const std::string& name);

RunResult run(const JobSpec& spec);
int main_entry(int argc, const char* const* argv);

using Json = nlohmann::ordered_json;

Json to_json(const SingularityReport& rep);
Json to_json(const CriterionResult& c);
Json to_json(const PolarIdentityReport& rep);
Json to_json(const MerleReport& rep);
std::string decimal(std::uint64_t v);
std::string decimal(const ExtNat& v);

/// One output record with the fixed top-level key set.
struct Record {
  Command command = Command::Invariants;
  std::string poly;
  std::uint64_t characteristic = 0;
  std::optional<Weight> weights;
  std::optional<std::pair<long, long>> line;
  std::string status = "ok";
  std::optional<std::pair<std::string, std::string>> error;  ///< (code, message)
  std::optional<SingularityReport> report;
  std::optional<CriterionResult> direct;
  std::vector<CriterionResult> criteria;
  std::optional<PolarIdentityReport> polar;
  std::optional<MerleReport> merle;
  std::optional<std::vector<std::string>> inconsistencies;
  std::vector<std::pair<std::string, std::uint64_t>> timings_us;
};

Json to_json(const Record& r);
std::string to_table(const Record& r);

}  // namespace charplane::cli

#endif  // CHARPLANE_CLI_CLI_HPP
