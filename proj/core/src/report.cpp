#include "l3col/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace l3col {

namespace {

using nlohmann::json;

std::string path_str(const std::vector<Route>& path) {
  std::string out;
  for (Route r : path) {
    if (!out.empty()) out += " > ";
    out += route_name(r);
  }
  return out;
}

json lists_json(const ListAssignment& L) {
  json a = json::array();
  for (const ColourSet& s : L) a.push_back(s.str());
  return a;
}

}  // namespace

std::string report_text(const SolveReport& r) {
  std::string out;
  out += "answer: " + std::string(r.yes ? "yes" : "no") + '\n';
  out += "route: " + std::string(route_name(r.route)) + '\n';
  out += "path: " + path_str(r.path) + '\n';
  out += "reason: " + r.reason + '\n';
  if (r.fallback) out += "fallback: exact search\n";
  out += "branches: " + std::to_string(r.stats.branches) + '\n';
  out += "rule-steps: " + std::to_string(r.stats.rule_steps) + '\n';
  if (r.stats.subsets) out += "subsets: " + std::to_string(r.stats.subsets) + '\n';
  if (r.stats.nodes) out += "nodes: " + std::to_string(r.stats.nodes) + '\n';
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r.stats.seconds);
  out += "seconds: " + std::string(buf) + '\n';
  for (const auto& n : r.notes) out += "note: " + n + '\n';
  return out;
}

std::string report_json(const SolveReport& r) {
  json j;
  j["answer"] = r.yes ? "yes" : "no";
  j["route"] = std::string(route_name(r.route));
  json path = json::array();
  for (Route x : r.path) path.push_back(std::string(route_name(x)));
  j["path"] = path;
  j["reason"] = r.reason;
  j["fallback"] = r.fallback;
  j["notes"] = r.notes;
  j["stats"] = {{"branches", r.stats.branches},
                {"rule_steps", r.stats.rule_steps},
                {"subsets", r.stats.subsets},
                {"nodes", r.stats.nodes},
                {"seconds", r.stats.seconds}};
  if (r.yes) j["witness"] = r.witness;
  return j.dump();
}

std::string profile_json(const ClassProfile& p) {
  json j;
  if (p.diameter)
    j["diameter"] = *p.diameter;
  else
    j["diameter"] = nullptr;
  json free = json::object();
  for (int k = 3; k <= 9; ++k) free["C" + std::to_string(k)] = p.free_of(k);
  j["cycle_free"] = free;
  j["k4"] = p.has_k4;
  j["bipartite"] = p.bipartite;
  json classes = json::array();
  for (GraphClass c : {GraphClass::C5Free, GraphClass::C6Free, GraphClass::C4C7Free, GraphClass::C4C8Free,
                       GraphClass::C4C9Free})
    if (p.in_class(c)) classes.push_back(std::string(class_name(c)));
  j["classes"] = classes;
  return j.dump();
}

std::string propagation_text(const PropagationResult& r) {
  std::string out = "outcome: " + std::string(outcome_name(r.outcome)) + '\n';
  if (r.decided_by) out += "decided-by: " + std::string(rule_tag(*r.decided_by)) + '\n';
  out += "steps: " + std::to_string(r.steps) + '\n';
  out += "lists:";
  for (const ColourSet& s : r.lists) out += ' ' + s.str();
  out += '\n';
  return out;
}

std::string propagation_json(const PropagationResult& r) {
  json j;
  j["outcome"] = std::string(outcome_name(r.outcome));
  if (r.decided_by) j["decided_by"] = std::string(rule_tag(*r.decided_by));
  j["steps"] = r.steps;
  j["lists"] = lists_json(r.lists);
  if (r.outcome == Outcome::Yes) j["colouring"] = r.colouring;
  return j.dump();
}

std::string verification_text(const GadgetVerification& v) {
  std::string out = "t: " + std::to_string(v.t) + '\n';
  out += "diameter: " + (v.diameter ? std::to_string(*v.diameter) : std::string("infinite")) + '\n';
  out += "census:";
  for (const auto& [k, c] : v.census) out += " C" + std::to_string(k) + "=" + std::to_string(c);
  out += '\n';
  out += "even-cycle-free: " + std::string(v.even_free ? "yes" : "no") + '\n';
  out += "only-c3-c5: " + std::string(v.only_c3_c5 ? "yes" : "no") + '\n';
  out += "c5-without-hub: " + std::to_string(v.c5_without_hub) + '\n';
  out += "verify: " + std::string(v.passed ? "pass" : "fail") + '\n';
  for (const auto& n : v.notes) out += "note: " + n + '\n';
  return out;
}

std::string verification_json(const GadgetVerification& v, std::optional<bool> equivalence) {
  json j;
  j["t"] = v.t;
  if (v.diameter)
    j["diameter"] = *v.diameter;
  else
    j["diameter"] = nullptr;
  json census = json::object();
  for (const auto& [k, c] : v.census) census["C" + std::to_string(k)] = c;
  j["census"] = census;
  j["even_free"] = v.even_free;
  j["only_c3_c5"] = v.only_c3_c5;
  j["c5_without_hub"] = v.c5_without_hub;
  j["passed"] = v.passed;
  j["notes"] = v.notes;
  if (equivalence)
    j["equivalence"] = *equivalence;
  else
    j["equivalence"] = nullptr;
  return j.dump();
}

}  // namespace l3col
