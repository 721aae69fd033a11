#include "strew/report.hpp"

#include <json.hpp>

#include "strew/version.hpp"

namespace strew {

using json = nlohmann::ordered_json;

namespace {

const char* reason_name(RuleTerminationReason r) {
  switch (r) {
    case RuleTerminationReason::LengthReducing: return "length-reducing";
    case RuleTerminationReason::ShortlexDecreasing: return "shortlex-decreasing";
    case RuleTerminationReason::None: return "none";
  }
  return "none";
}

json rules_json(const RewriteSystem& system) {
  json out = json::array();
  for (const Rule& rule : system.rules())
    out.push_back(rule.lhs + " -> " + (rule.rhs.empty() ? "eps" : rule.rhs));
  return out;
}

json termination_json(const TerminationCertificate& cert) {
  json per_rule = json::array();
  for (RuleTerminationReason r : cert.per_rule)
    per_rule.push_back(reason_name(r));
  return json{{"certified", cert.certified()}, {"per_rule", per_rule}};
}

json confluence_json(const ConfluenceReport& report) {
  json failures = json::array();
  for (const auto& failure : report.non_joinable) {
    failures.push_back(json{{"left", failure.pair.left},
                            {"right", failure.pair.right},
                            {"nf_left", failure.nf_left},
                            {"nf_right", failure.nf_right},
                            {"rules", {failure.pair.rule_a, failure.pair.rule_b}}});
  }
  return json{{"confluent", report.confluent}, {"non_joinable", failures}};
}

json forward_closure_json(const ForwardClosureReport& report) {
  json out{{"holds", report.holds}};
  if (report.counterexample) {
    out["counterexample"] = json{{"s_part", report.counterexample->first},
                                 {"rule_index", report.counterexample->second}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json quasi_det_json(const QuasiDetReport& report) {
  return json{{"holds", report.holds},
              {"lambda_rhs", report.lambda_rhs},
              {"end_stable", report.end_stable},
              {"end_pair_repetitions", report.end_pair_repetitions}};
}

json rhs_pairs_json(const std::vector<RhsPair>& pairs) {
  json out = json::array();
  for (const RhsPair& pair : pairs) {
    out.push_back(json{{"first", pair.first},
                       {"second", pair.second},
                       {"extension", pair.extension},
                       {"rules", {pair.rule_suffix, pair.rule_whole}}});
  }
  return out;
}

json rhs_quasi_det_json(const RhsQuasiDetReport& report) {
  return json{{"holds", report.holds},
              {"pairs", rhs_pairs_json(report.pairs)},
              {"end_stable", report.end_stable},
              {"repetitions", report.repetitions}};
}

json overlaps_json(const OverlapReport& report) {
  return json{{"lhs_lhs", report.lhs_lhs}, {"lhs_rhs", report.lhs_rhs}};
}

json collapse_json(const CollapseVerdict& verdict) {
  json out{{"collapsing", verdict.collapsing}};
  if (verdict.witness) {
    out["witness"] = json{{"rhs", verdict.witness->rhs},
                          {"y", verdict.witness->y},
                          {"rule_index", verdict.witness->rule_index}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json stages_json(const RewriteSystem& system, const LmReport& report) {
  json out;
  out["termination"] = termination_json(report.termination);
  out["termination_provenance"] = to_string(report.termination_provenance);
  out["right_reduced"] =
      report.right_reduced ? json(rules_json(*report.right_reduced)) : json(nullptr);
  out["confluence"] =
      report.confluence ? confluence_json(*report.confluence) : json(nullptr);
  out["forward_closure"] =
      report.forward_closure ? forward_closure_json(*report.forward_closure) : json(nullptr);
  out["collapse"] = report.collapse ? collapse_json(*report.collapse) : json(nullptr);
  out["quasi_deterministic"] = quasi_det_json(report.quasi_det);
  out["rhs_quasi_deterministic"] = rhs_quasi_det_json(report.rhs_quasi_det);
  out["overlap_diagnostics"] = overlaps_json(report.overlaps);
  out["duplicate_lhs"] = report.duplicate_lhs_pairs;
  out["input_rules"] = rules_json(system);
  return out;
}

} // namespace

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string render_report(const ReportEnvelope& envelope, const std::string& payload_json) {
  json assumptions = json::array();
  for (const auto& note : envelope.assumptions) {
    assumptions.push_back(
        json{{"fact", note.fact}, {"state", note.state}, {"source", note.source}});
  }
  json report{{"schema", kReportSchema},
              {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
              {"command", envelope.command},
              {"input", {{"path", envelope.input_path}, {"digest", envelope.input_digest}}},
              {"assumptions", assumptions},
              {"verdict", json::parse(payload_json)},
              {"timing_ms", envelope.timing_ms}};
  return report.dump(2);
}

std::string payload_normalize(const Word& input, const Word& normal_form,
                              bool input_irreducible, const std::string& monadic_term) {
  json out{{"input", input},
           {"normal_form", normal_form},
           {"input_irreducible", input_irreducible}};
  if (!monadic_term.empty())
    out["monadic_term"] = monadic_term;
  return out.dump();
}

std::string payload_check(const RewriteSystem& system, const LmReport& report) {
  json out = stages_json(system, report);
  out.erase("collapse");
  out["inconclusive"] = report.inconclusive;
  return out.dump();
}

std::string payload_collapse(const CollapseVerdict& verdict) {
  return collapse_json(verdict).dump();
}

std::string payload_cap(const Word& u, const Word& v, const CapResult& result) {
  json out{{"u", u}, {"v", v}, {"derivable", result.derivable}};
  out["cap_term"] = result.cap_term ? json(*result.cap_term) : json(nullptr);
  return out.dump();
}

std::string payload_lm(const RewriteSystem& system, const LmReport& report) {
  json out{{"is_lm", report.is_lm},
           {"conditional", report.conditional},
           {"inconclusive", report.inconclusive}};
  out["stages"] = stages_json(system, report);
  return out.dump();
}

std::string payload_explain(const Word& u, const Word& v, const Word& w,
                            const RunTrace& trace) {
  json steps = json::array();
  for (const RunTrace::Step& step : trace.steps)
    steps.push_back(json{{"input", std::string(1, step.input)}, {"stack", step.stack}});
  return json{{"u", u}, {"v", v}, {"w", w}, {"accepted", trace.accepted}, {"trace", steps}}
      .dump();
}

} // namespace strew
