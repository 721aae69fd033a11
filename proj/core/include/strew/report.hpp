#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "strew/decide.hpp"
#include "strew/pushdown.hpp"

namespace strew {

// Stable 64-bit FNV-1a digest of the raw input bytes, as 16 hex digits.
std::string fnv1a_digest(std::string_view bytes);

// Everything a JSON report carries besides the verdict payload. Reports
// for identical inputs are byte-identical except for timing_ms.
struct ReportEnvelope {
  std::string command;
  std::string input_path;
  std::string input_digest;
  struct AssumptionNote {
    std::string fact;
    std::string state;   // certified | assumed | absent | verified
    std::string source;  // shortlex-check | file | flag | pipeline | none
  };
  std::vector<AssumptionNote> assumptions;
  double timing_ms = 0.0;
};

// Wraps a payload (itself JSON text) in the versioned envelope.
std::string render_report(const ReportEnvelope& envelope, const std::string& payload_json);

// Per-command verdict payloads.
std::string payload_normalize(const Word& input, const Word& normal_form,
                              bool input_irreducible, const std::string& monadic_term);
std::string payload_check(const RewriteSystem& system, const LmReport& report);
std::string payload_collapse(const CollapseVerdict& verdict);
std::string payload_cap(const Word& u, const Word& v, const CapResult& result);
std::string payload_lm(const RewriteSystem& system, const LmReport& report);
std::string payload_explain(const Word& u, const Word& v, const Word& w,
                            const RunTrace& trace);

} // namespace strew
