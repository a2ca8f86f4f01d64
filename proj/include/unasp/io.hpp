#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "json.hpp"
#include "unasp/solver.hpp"

namespace unasp {

using json = nlohmann::ordered_json;

inline double round9(double x) {
  double r = std::round(x * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

inline json to_json(const Interval& v) { return json::array({round9(v.lower()), round9(v.upper())}); }

inline json to_json(const Interpretation& i) {
  json pos = json::object(), neg = json::object();
  for (const auto& [a, v] : i.positive()) pos[a] = to_json(v);
  for (const auto& [a, v] : i.negative()) neg[a] = to_json(v);
  return {{"positive", pos}, {"negative", neg}};
}

inline json to_json(const ContractionReport& r, const AtomTable& t) {
  json gains = json::array();
  for (const auto& [a, g] : r.gains)
    gains.push_back({{"atom", t.name(a)}, {"g1", round9(g.g1)}, {"g2", round9(g.g2)}, {"norm", round9(g.norm())}});
  json j = {{"class", class_name(r.cls)}, {"gains", gains}, {"k_counts", r.k_counts}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline json to_json(const SolveReport& r, const AtomTable& t) {
  json sets = json::array();
  for (const auto& i : r.answer_sets) sets.push_back(to_json(i));
  const Diagnostics& d = r.diagnostics;
  json comps = json::array();
  for (const auto& c : d.components) {
    json j = {{"atoms", c.atoms},         {"dispatch", dispatch_name(c.dispatch)},
              {"cycles", c.cycles},       {"assumption_set", c.chosen},
              {"evaluations", c.evaluations}, {"iterations", c.iterations},
              {"results", c.results}};
    if (c.contraction) j["contraction"] = to_json(*c.contraction, t);
    if (!c.notes.empty()) j["notes"] = c.notes;
    comps.push_back(std::move(j));
  }
  json diag = {{"mi_steps", d.mi_steps},     {"topo_order", d.topo_order}, {"components", comps},
               {"branches", d.branches},     {"rejected", d.rejected},     {"truncated", d.truncated},
               {"max_iters_exceeded", d.max_iters_exceeded}};
  if (d.conflict) diag["conflict"] = *d.conflict;
  if (!d.notes.empty()) diag["notes"] = d.notes;
  return {{"status", status_name(r.status)}, {"answer_sets", sets}, {"diagnostics", diag}};
}

inline json to_json(const AnalysisReport& r, const AtomTable& t) {
  json comps = json::array();
  for (const auto& c : r.components) {
    json j = {{"atoms", c.atoms}, {"cyclic", c.cyclic}};
    if (c.cyclic) {
      j["cycles"] = c.cycles;
      j["assumption_set"] = c.nmi_assumption;
      j["branch_bound_assumption_set"] = c.bb_assumption;
      if (c.contraction) j["contraction"] = to_json(*c.contraction, t);
    }
    if (!c.notes.empty()) j["notes"] = c.notes;
    comps.push_back(std::move(j));
  }
  return {{"mi_assigned", r.mi_assigned}, {"components", comps}};
}

inline std::string format_text(const SolveReport& r) {
  std::string s;
  if (r.answer_sets.empty()) {
    s += r.status == SolveStatus::Inconsistent ? "inconsistent" : r.status == SolveStatus::Incomplete ? "incomplete"
                                                                                                       : "no answer set";
    if (r.diagnostics.conflict) s += " (conflict at " + *r.diagnostics.conflict + ")";
    return s + "\n";
  }
  for (std::size_t k = 0; k < r.answer_sets.size(); ++k)
    s += "Answer " + std::to_string(k + 1) + ": " + to_string(r.answer_sets[k]) + "\n";
  s += std::string("status: ") + status_name(r.status) + "\n";
  return s;
}

inline std::string format_text(const AnalysisReport& r) {
  std::string s = "monotonic stage:";
  for (const auto& a : r.mi_assigned) s += " " + a;
  s += "\n";
  for (const auto& c : r.components) {
    std::string atoms;
    for (const auto& a : c.atoms) atoms += (atoms.empty() ? "" : ",") + a;
    s += "component {" + atoms + "}" + (c.cyclic ? " cyclic" : "") + "\n";
    for (const auto& cy : c.cycles) s += "  cycle " + cy + "\n";
    auto list = [](const std::vector<std::string>& v) {
      std::string x;
      for (const auto& a : v) x += (x.empty() ? "" : ",") + a;
      return "{" + x + "}";
    };
    if (c.cyclic) {
      s += "  assumption set " + list(c.nmi_assumption) + "\n";
      if (!c.bb_assumption.empty()) s += "  branch-and-bound set " + list(c.bb_assumption) + "\n";
    }
    if (c.contraction) s += std::string("  contraction ") + class_name(c.contraction->cls) + "\n";
    for (const auto& n : c.notes) s += "  note: " + n + "\n";
  }
  return s;
}

// Model file: {"positive": {atom: [l,u]}, "negative": {atom: [l,u]}}; the
// negative section is optional.
inline Interpretation parse_model(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::BadModel, std::string("model is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("positive")) throw Error(Errc::BadModel, "model needs a \"positive\" object");
  Interpretation i;
  auto section = [&](const char* key, bool negative) {
    if (!j.contains(key)) return;
    const json& m = j.at(key);
    if (!m.is_object()) throw Error(Errc::BadModel, std::string("\"") + key + "\" must be an object");
    for (const auto& [atom, v] : m.items()) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw Error(Errc::BadModel, "value of " + atom + " must be a two-element numeric array");
      i.set(atom, negative, Interval(v[0].get<double>(), v[1].get<double>()));
    }
  };
  section("positive", false);
  section("negative", true);
  return i;
}

}  // namespace unasp
