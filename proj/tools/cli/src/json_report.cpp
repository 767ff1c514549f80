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

#include <sstream>

#include "charplane/cli/cli.hpp"

namespace charplane::cli {

std::string decimal(std::uint64_t v) { return std::to_string(v); }
std::string decimal(const ExtNat& v) { return v.to_string(); }

namespace {

template <class Range>
Json decimals(const Range& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(decimal(v));
  return out;
}

Json ratio(const mpq_class& q) { return q.get_str(); }

}  // namespace

Json to_json(const SingularityReport& rep) {
  Json j;
  j["ord"] = decimal(rep.ord);
  j["mu"] = decimal(rep.mu);
  j["delta"] = decimal(rep.delta);
  j["r"] = decimal(rep.r);
  j["c"] = decimal(rep.c);
  j["mu_bar"] = decimal(rep.mu_bar);
  j["holds"] = std::string(to_string(rep.milnor_formula_holds));
  Json branches = Json::array();
  for (const auto& b : rep.per_branch) {
    Json jb;
    jb["mult_seq"] = decimals(b.mult_seq);
    jb["semigroup"] = decimals(b.gens);
    jb["e"] = decimals(b.e);
    jb["n"] = decimals(b.n_seq);
    jb["n_star"] = decimal(b.n_star);
    jb["conductor"] = decimal(b.conductor);
    jb["conductor_closed_form"] = decimal(b.conductor_closed_form);
    jb["delta"] = decimal(b.delta_branch);
    jb["gaps"] = decimal(b.gap_count);
    branches.push_back(std::move(jb));
  }
  j["branches"] = std::move(branches);
  Json pairs = Json::array();
  for (const auto& [key, value] : rep.pairwise) {
    pairs.push_back(Json{{"i", decimal(key.first)}, {"j", decimal(key.second)}, {"i0", decimal(value)}});
  }
  j["pairwise"] = std::move(pairs);
  return j;
}

Json to_json(const CriterionResult& c) {
  Json j;
  j["name"] = c.name;
  j["kind"] = std::string(to_string(c.kind));
  j["applicable"] = c.applicable;
  j["verdict"] = std::string(to_string(c.verdict));
  j["witness"] = c.witness;
  return j;
}

Json to_json(const PolarIdentityReport& rep) {
  Json j;
  j["l"] = rep.l.to_string();
  j["polar"] = rep.polar.to_string();
  j["mu"] = decimal(rep.mu);
  j["mu_bar"] = decimal(rep.mu_bar);
  j["i0_f_l"] = decimal(rep.i0_f_l);
  j["i0_f_polar"] = decimal(rep.i0_f_polar);
  j["i0_l_polar"] = decimal(rep.i0_l_polar);
  j["i0_branches_l"] = decimals(rep.i0_branches_l);
  Json factors = Json::array();
  for (const auto& h : rep.factors) {
    factors.push_back(Json{{"ord", decimal(h.ord)},
                           {"power", decimal(h.power)},
                           {"i0_f_h", decimal(h.i0_f_h)},
                           {"i0_l_h", decimal(h.i0_l_h)}});
  }
  j["factors"] = std::move(factors);
  j["dedekind_applicable"] = rep.dedekind_applicable;
  j["dedekind_holds"] = rep.dedekind_holds;
  j["line_polar_bound"] = rep.line_polar_bound;
  j["line_polar_equality"] = rep.line_polar_equality;
  j["hypothesis_i"] = rep.hypothesis_i;
  j["hypothesis_ii"] = rep.hypothesis_ii;
  j["condition_iii"] = rep.condition_iii;
  j["teissier_bound"] = rep.teissier_bound;
  j["teissier_equality"] = rep.teissier_equality;
  j["factors_consistent"] = rep.factors_consistent;
  j["failing_factors"] = rep.failing_factors;
  return j;
}

Json to_json(const MerleReport& rep) {
  Json j;
  j["n"] = decimal(rep.n);
  j["swapped"] = rep.swapped;
  j["semigroup"] = decimals(rep.gens);
  j["e"] = decimals(rep.e);
  Json bundles = Json::array();
  for (const auto& b : rep.bundles) {
    Json jb;
    jb["k"] = decimal(b.k);
    jb["ord_h"] = decimal(b.ord_h);
    jb["expected_ord"] = decimal(b.expected_ord);
    jb["expected_ratio"] = ratio(b.expected_ratio);
    Json ratios = Json::array();
    for (const auto& q : b.contact_ratios) ratios.push_back(ratio(q));
    jb["contact_ratios"] = std::move(ratios);
    jb["ord_ok"] = b.ord_ok;
    jb["ord_divisibility_ok"] = b.ord_divisibility_ok;
    bundles.push_back(std::move(jb));
  }
  j["bundles"] = std::move(bundles);
  Json factors = Json::array();
  for (const auto& h : rep.factors) {
    Json jh;
    jh["ord"] = decimal(h.ord);
    jh["power"] = decimal(h.power);
    jh["i0_f_h"] = decimal(h.i0_f_h);
    jh["ratio"] = h.i0_f_h.is_finite() ? Json(ratio(h.ratio)) : Json("INF");
    jh["bundle"] = decimal(h.bundle);
    factors.push_back(std::move(jh));
  }
  j["factors"] = std::move(factors);
  j["total_ord"] = decimal(rep.total_ord);
  j["violations"] = rep.violations;
  return j;
}

Json to_json(const Record& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = std::string(to_string(r.command));
  Json input;
  input["poly"] = r.poly;
  input["p"] = decimal(r.characteristic);
  input["weights"] = r.weights ? Json::array({decimal(r.weights->n), decimal(r.weights->m)}) : Json(nullptr);
  input["line"] = r.line ? Json::array({std::to_string(r.line->first), std::to_string(r.line->second)})
                         : Json(nullptr);
  j["input"] = std::move(input);
  j["status"] = r.status;
  j["error"] = r.error ? Json{{"code", r.error->first}, {"message", r.error->second}} : Json(nullptr);
  j["report"] = r.report ? to_json(*r.report) : Json(nullptr);
  j["field_tower"] = r.report ? Json(decimal(r.report->field_degree)) : Json(nullptr);
  j["direct"] = r.direct ? to_json(*r.direct) : Json(nullptr);
  Json criteria = Json::array();
  for (const auto& c : r.criteria) criteria.push_back(to_json(c));
  j["criteria"] = std::move(criteria);
  j["polar"] = r.polar ? to_json(*r.polar) : Json(nullptr);
  j["merle"] = r.merle ? to_json(*r.merle) : Json(nullptr);
  j["inconsistencies"] = r.inconsistencies ? Json(*r.inconsistencies) : Json(nullptr);
  Json timings = Json::object();
  for (const auto& [stage, us] : r.timings_us) timings[stage + "_us"] = decimal(us);
  j["timings"] = std::move(timings);
  return j;
}

std::string to_table(const Record& r) {
  std::ostringstream os;
  auto row = [&os](const std::string& key, const std::string& value) {
    os << "  " << key << std::string(key.size() < 22 ? 22 - key.size() : 1, ' ') << value << '\n';
  };
  os << to_string(r.command) << "  p=" << r.characteristic << "  f = " << r.poly << '\n';
  row("status", r.status);
  if (r.error) row("error", r.error->first + ": " + r.error->second);
  if (r.report) {
    const auto& rep = *r.report;
    row("ord", decimal(rep.ord));
    row("mu", decimal(rep.mu));
    row("delta", decimal(rep.delta));
    row("r", decimal(rep.r));
    row("c", decimal(rep.c));
    row("mu_bar", decimal(rep.mu_bar));
    row("mu = 2delta-r+1", std::string(to_string(rep.milnor_formula_holds)));
    row("field degree", decimal(rep.field_degree));
    for (const auto& b : rep.per_branch) {
      std::string gens;
      for (auto g : b.gens) gens += (gens.empty() ? "" : ",") + decimal(g);
      std::string seq;
      for (auto m : b.mult_seq) seq += (seq.empty() ? "" : ",") + decimal(m);
      row("branch " + decimal(b.id), "<" + gens + ">  mult [" + seq + "]  c=" + decimal(b.conductor));
    }
  }
  if (r.direct) row(r.direct->name, std::string(to_string(r.direct->verdict)) + "  " + r.direct->witness);
  for (const auto& c : r.criteria) {
    const std::string verdict = c.applicable ? std::string(to_string(c.verdict)) : "n/a";
    row(c.name, verdict + "  " + c.witness);
  }
  if (r.polar) {
    const auto& p = *r.polar;
    row("l", p.l.to_string());
    row("P_l(f)", p.polar.to_string());
    row("i0(f,l)", decimal(p.i0_f_l));
    row("i0(f,P_l(f))", decimal(p.i0_f_polar));
    row("i0(l,P_l(f))", decimal(p.i0_l_polar));
    row("teissier equality", p.teissier_equality ? "true" : "false");
  }
  if (r.merle) {
    for (const auto& b : r.merle->bundles) {
      row("h_" + decimal(b.k), "ord " + decimal(b.ord_h) + " (expected " + decimal(b.expected_ord) + "), ratio " +
                                   b.expected_ratio.get_str());
    }
    row("merle violations", decimal(r.merle->violations.size()));
  }
  if (r.inconsistencies) {
    row("inconsistencies", decimal(r.inconsistencies->size()));
    for (const auto& s : *r.inconsistencies) row("", s);
  }
  return os.str();
}

}  // namespace charplane::cli
