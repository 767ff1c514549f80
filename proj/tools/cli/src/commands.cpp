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

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "charplane/cli/cli.hpp"

namespace charplane::cli {

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::Invariants:
      return "invariants";
    case Command::Tame:
      return "tame";
    case Command::Sweep:
      return "sweep";
    case Command::Corpus:
      return "corpus";
    case Command::Merle:
      return "merle";
    case Command::Teissier:
      return "teissier";
  }
  return "invariants";
}

std::string template_text(const std::string& name) {
  if (name == "milnor-example") return "x^{p+2}+y^{p+1}+x^{p+1}*y";
  throw UsageError("unknown template '" + name + "' (available: milnor-example)");
}

std::string expand_placeholders(const std::string& text, std::uint64_t p) {
  std::string out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t open = text.find('{', pos);
    if (open == std::string::npos) {
      out += text.substr(pos);
      return out;
    }
    const std::size_t close = text.find('}', open);
    if (close == std::string::npos) throw UsageError("unterminated placeholder in '" + text + "'");
    out += text.substr(pos, open - pos);
    std::string body;
    for (char ch : text.substr(open + 1, close - open - 1)) {
      if (ch != ' ') body += ch;
    }
    // Accepted forms: p, k*p, p+j, p-j, k*p+j, k*p-j.
    std::int64_t factor = 1;
    std::int64_t offset = 0;
    std::size_t i = 0;
    auto read_number = [&](std::int64_t& value) {
      const std::size_t start = i;
      value = 0;
      while (i < body.size() && body[i] >= '0' && body[i] <= '9') value = value * 10 + (body[i++] - '0');
      return i > start;
    };
    bool ok = true;
    if (i < body.size() && body[i] != 'p') {
      ok = read_number(factor) && i < body.size() && body[i] == '*';
      ++i;
    }
    ok = ok && i < body.size() && body[i] == 'p';
    ++i;
    if (ok && i < body.size()) {
      const char sign = body[i++];
      ok = (sign == '+' || sign == '-') && read_number(offset) && i == body.size();
      if (sign == '-') offset = -offset;
    }
    if (!ok) throw UsageError("unsupported placeholder '{" + body + "}'");
    const std::int64_t value = factor * static_cast<std::int64_t>(p) + offset;
    if (value < 0) throw UsageError("placeholder '{" + body + "}' is negative for p = " + std::to_string(p));
    out += std::to_string(value);
    pos = close + 1;
  }
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t micros_since(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count());
}

Field make_field(std::uint64_t p) { return p == 0 ? FieldCtx::rationals() : FieldCtx::make(p, 1); }

bool is_hypothesis_code(ErrorCode code) {
  return code == ErrorCode::HypothesisFailed || code == ErrorCode::NotIrreducible;
}

struct Outcome {
  Record record;
  int exit_code = kExitOk;
};

Outcome compute(Command command, const std::string& text, std::uint64_t p, const JobSpec& spec) {
  Outcome o;
  Record& r = o.record;
  r.command = command;
  r.poly = text;
  r.characteristic = p;
  r.weights = spec.weights;
  r.line = spec.line;
  const auto start = Clock::now();
  auto fail = [&](const std::string& status, const std::string& code, const std::string& message, int exit_code) {
    r.status = status;
    r.error = std::make_pair(code, message);
    o.exit_code = exit_code;
  };
  try {
    const Field field = make_field(p);
    const BivarPoly f = parse_poly(text, field);
    r.timings_us.emplace_back("parse", micros_since(start));
    std::optional<BivarPoly> line;
    if (spec.line) {
      line = line_from_direction(Scalar(field, spec.line->first), Scalar(field, spec.line->second));
    }
    const auto compute_start = Clock::now();
    switch (command) {
      case Command::Invariants:
        r.report = invariant_report(f);
        break;
      case Command::Tame:
      case Command::Sweep:
      case Command::Corpus: {
        TamenessReport t = evaluate_tameness(f, TamenessOptions{spec.weights, line});
        r.report = std::move(t.invariants);
        r.direct = std::move(t.direct);
        r.criteria = std::move(t.criteria);
        r.polar = std::move(t.polar);
        r.merle = std::move(t.merle);
        r.inconsistencies = std::move(t.inconsistencies);
        break;
      }
      case Command::Merle:
        r.report = invariant_report(f);
        r.merle = merle_verify(f);
        break;
      case Command::Teissier: {
        r.report = invariant_report(f);
        const BivarPoly l = line ? *line : generic_transversal(f);
        try {
          r.polar = teissier_bound(f, l);
        } catch (const HypothesisFailedError& e) {
          r.polar = e.report();
          throw;
        }
        break;
      }
    }
    r.timings_us.emplace_back("compute", micros_since(compute_start));
  } catch (const HypothesisFailedError& e) {
    fail("hypothesis_failed", std::string(to_string(e.code())), e.what(), kExitHypothesisFailed);
  } catch (const Error& e) {
    if (is_hypothesis_code(e.code())) {
      fail("hypothesis_failed", std::string(to_string(e.code())), e.what(), kExitHypothesisFailed);
    } else {
      fail("error", std::string(to_string(e.code())), e.what(), kExitInputError);
    }
  }
  r.timings_us.emplace_back("total", micros_since(start));
  return o;
}

std::string render(const Record& r, bool table) { return table ? to_table(r) : to_json(r).dump() + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_directive(const std::string& value) {
  const auto list = parse_uint_list(trim(value));
  if (list.size() != 1) throw UsageError("malformed @p= directive");
  return list.front();
}

std::string poly_from_spec(const JobSpec& spec) {
  if (spec.template_name) return template_text(*spec.template_name);
  if (!spec.poly_text.empty()) return spec.poly_text;
  if (spec.input_path) {
    std::istringstream in(read_file(*spec.input_path));
    std::string line;
    while (std::getline(in, line)) {
      line = trim(line.substr(0, line.find('#')));
      if (!line.empty()) return line;
    }
  }
  throw UsageError("no polynomial given");
}

void check_prime(std::uint64_t p) {
  if (p < 2) throw UsageError("--primes: " + std::to_string(p) + " is not a prime");
  try {
    FieldCtx::make(p, 1);
  } catch (const Error& e) {
    throw UsageError(std::string("--primes: ") + e.what());
  }
}

RunResult run_single(const JobSpec& spec) {
  RunResult result;
  const std::string text = expand_placeholders(poly_from_spec(spec), spec.characteristic);
  Outcome o = compute(spec.command, text, spec.characteristic, spec);
  result.exit_code = o.exit_code;
  if (o.record.error) result.err = "charplane: " + o.record.error->second + "\n";
  if (o.exit_code != kExitInputError) result.out = render(o.record, spec.table);
  return result;
}

RunResult run_sweep(const JobSpec& spec) {
  if (spec.primes.empty()) throw UsageError("sweep needs --primes");
  for (auto p : spec.primes) check_prime(p);
  const std::string text = poly_from_spec(spec);
  RunResult result;
  Json tame = Json::array();
  Json untame = Json::array();
  Json failed = Json::array();
  for (auto p : spec.primes) {
    Outcome o = compute(Command::Sweep, expand_placeholders(text, p), p, spec);
    result.out += render(o.record, spec.table);
    if (o.record.status != "ok" || !o.record.direct) {
      failed.push_back(decimal(p));
    } else if (o.record.direct->verdict == Verdict::True) {
      tame.push_back(decimal(p));
    } else {
      untame.push_back(decimal(p));
    }
  }
  if (spec.table) {
    result.out += "summary  tame: " + tame.dump() + "  untame: " + untame.dump() + "  failed: " + failed.dump() + "\n";
  } else {
    Json summary;
    summary["schema"] = kSchemaVersion;
    summary["command"] = "sweep";
    summary["summary"] = Json{{"poly", text}, {"tame", tame}, {"untame", untame}, {"failed", failed}};
    result.out += summary.dump() + "\n";
  }
  return result;
}

struct Audit {
  std::uint64_t lines = 0;
  std::uint64_t ok = 0;
  std::uint64_t errors = 0;
  std::uint64_t hypothesis_failed = 0;
  std::uint64_t tame = 0;
  std::uint64_t untame = 0;
  std::uint64_t milnor_bound_violations = 0;
  std::uint64_t inconsistencies = 0;
  std::uint64_t char0_untame = 0;
  std::uint64_t tame_with_divisible_generator = 0;
};

void tally(Audit& a, const Record& r) {
  ++a.lines;
  if (r.status == "error") {
    ++a.errors;
    return;
  }
  if (r.status == "hypothesis_failed") {
    ++a.hypothesis_failed;
    return;
  }
  ++a.ok;
  const SingularityReport& rep = *r.report;
  const bool tame = r.direct && r.direct->verdict == Verdict::True;
  ++(tame ? a.tame : a.untame);
  if (rep.mu.is_finite() && rep.mu.value() + rep.r < 2 * rep.delta + 1) ++a.milnor_bound_violations;
  if (r.inconsistencies) a.inconsistencies += r.inconsistencies->size();
  if (r.characteristic == 0 && !tame) ++a.char0_untame;
  if (tame && r.characteristic != 0 && rep.r == 1 && rep.ord >= 2) {
    for (auto g : rep.per_branch.front().gens) {
      if (g % r.characteristic == 0) {
        ++a.tame_with_divisible_generator;
        break;
      }
    }
  }
}

RunResult run_corpus(const JobSpec& spec) {
  if (!spec.input_path) throw UsageError("corpus needs -i <file>");
  std::istringstream in(read_file(*spec.input_path));
  RunResult result;
  Audit audit;
  std::uint64_t current_p = spec.characteristic;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::uint64_t p = current_p;
    const std::size_t at = line.find("@p=");
    if (at != std::string::npos) {
      p = parse_directive(line.substr(at + 3));
      line = trim(line.substr(0, at));
      if (line.empty()) {
        current_p = p;
        continue;
      }
    }
    Outcome o;
    try {
      o = compute(Command::Corpus, expand_placeholders(line, p), p, spec);
    } catch (const UsageError& e) {
      o.record.command = Command::Corpus;
      o.record.poly = line;
      o.record.characteristic = p;
      o.record.status = "error";
      o.record.error = std::make_pair(std::string("ParseError"), std::string(e.what()));
    }
    tally(audit, o.record);
    result.out += render(o.record, spec.table);
  }
  const std::vector<std::pair<std::string, std::uint64_t>> fields = {
      {"lines", audit.lines},
      {"ok", audit.ok},
      {"errors", audit.errors},
      {"hypothesis_failed", audit.hypothesis_failed},
      {"tame", audit.tame},
      {"untame", audit.untame},
      {"milnor_bound_violations", audit.milnor_bound_violations},
      {"criterion_inconsistencies", audit.inconsistencies},
      {"char0_untame", audit.char0_untame},
      {"tame_with_divisible_generator", audit.tame_with_divisible_generator},
  };
  if (spec.table) {
    result.out += "audit\n";
    for (const auto& [k, v] : fields) result.out += "  " + k + std::string(32 - k.size(), ' ') + decimal(v) + "\n";
  } else {
    Json a;
    for (const auto& [k, v] : fields) a[k] = decimal(v);
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "corpus";
    j["audit"] = std::move(a);
    result.out += j.dump() + "\n";
  }
  return result;
}

}  // namespace

RunResult run(const JobSpec& spec) {
  try {
    switch (spec.command) {
      case Command::Sweep:
        return run_sweep(spec);
      case Command::Corpus:
        return run_corpus(spec);
      default:
        return run_single(spec);
    }
  } catch (const UsageError& e) {
    return RunResult{kExitInputError, "", std::string("charplane: ") + e.what() + "\n"};
  }
}

int main_entry(int argc, const char* const* argv) {
  std::optional<JobSpec> spec;
  std::string help;
  try {
    spec = parse_args(argc, argv, &help);
  } catch (const UsageError& e) {
    std::cerr << "charplane: " << e.what() << "\n";
    return kExitInputError;
  }
  if (!spec) {
    std::cout << help;
    return kExitOk;
  }
  const RunResult result = run(*spec);
  std::cerr << result.err;
  if (spec->output_path) {
    std::ofstream out(*spec->output_path, std::ios::binary);
    if (!out) {
      std::cerr << "charplane: cannot write '" << *spec->output_path << "'\n";
      return kExitInputError;
    }
    out << result.out;
  } else {
    std::cout << result.out;
  }
  return result.exit_code;
}

}  // namespace charplane::cli
