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

#include <charconv>

#include <CLI11.hpp>

#include "charplane/cli/cli.hpp"

namespace charplane::cli {

namespace {

long parse_long(const std::string& text, const std::string& what) {
  long v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) throw UsageError(what + ": '" + text + "' is not an integer");
  return v;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto first = part.find_first_not_of(" \t");
    const auto last = part.find_last_not_of(" \t");
    out.push_back(first == std::string::npos ? std::string() : part.substr(first, last - first + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::pair<long, long> parse_pair(const std::string& text, const std::string& what) {
  const auto parts = split_commas(text);
  if (parts.size() != 2) throw UsageError(what + " expects two comma-separated integers");
  return {parse_long(parts[0], what), parse_long(parts[1], what)};
}

}  // namespace

std::vector<std::uint64_t> parse_uint_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split_commas(text)) {
    const long v = parse_long(part, "--primes");
    if (v < 0) throw UsageError("--primes: negative value " + part);
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

std::optional<JobSpec> parse_args(int argc, const char* const* argv, std::string* help) {
  CLI::App app{"Invariants and tameness of plane curve singularities", "charplane"};
  app.require_subcommand(1);

  struct Raw {
    std::string poly;
    long p = 0;
    std::string weights;
    std::string line;
    std::string primes;
    std::string templ;
    std::string input;
    std::string output;
    bool json = false;
    bool table = false;
  } raw;

  const std::vector<std::pair<Command, std::string>> commands = {
      {Command::Invariants, "mu, delta, r, conductor, branch semigroups"},
      {Command::Tame, "DIRECT tameness and every criterion side by side"},
      {Command::Sweep, "tame over a list of primes"},
      {Command::Corpus, "invariants and tame for each line of a file, plus an audit"},
      {Command::Merle, "decomposition of f_y into bundles"},
      {Command::Teissier, "polar intersection numbers for a line l"},
  };
  std::vector<std::pair<Command, CLI::App*>> subs;
  for (const auto& [cmd, description] : commands) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(cmd)), description);
    sub->add_option("poly", raw.poly, "polynomial in x, y");
    sub->add_option("-p,--char", raw.p, "characteristic (0 or a prime)");
    sub->add_option("--weights", raw.weights, "weight n,m");
    sub->add_option("--line", raw.line, "a,b for l = -b*x + a*y");
    sub->add_option("--primes", raw.primes, "comma-separated primes");
    sub->add_option("--template", raw.templ, "per-prime family (milnor-example)");
    sub->add_option("-i,--input", raw.input, "input file");
    sub->add_option("-o,--output", raw.output, "output file");
    auto* json = sub->add_flag("--json", raw.json, "JSON output (default)");
    auto* table = sub->add_flag("--table", raw.table, "human-readable table");
    json->excludes(table);
    subs.emplace_back(cmd, sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    if (help) *help = app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  JobSpec spec;
  for (const auto& [cmd, sub] : subs) {
    if (sub->parsed()) spec.command = cmd;
  }
  if (raw.p < 0) throw UsageError("characteristic must be 0 or a prime");
  spec.poly_text = raw.poly;
  spec.characteristic = static_cast<std::uint64_t>(raw.p);
  if (!raw.weights.empty()) {
    const auto [n, m] = parse_pair(raw.weights, "--weights");
    if (n <= 0 || m <= 0) throw UsageError("--weights must be positive");
    spec.weights = Weight{static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)};
  }
  if (!raw.line.empty()) spec.line = parse_pair(raw.line, "--line");
  if (!raw.primes.empty()) spec.primes = parse_uint_list(raw.primes);
  if (!raw.templ.empty()) spec.template_name = raw.templ;
  if (!raw.input.empty()) spec.input_path = raw.input;
  if (!raw.output.empty()) spec.output_path = raw.output;
  spec.table = raw.table;
  return spec;
}

}  // namespace charplane::cli
