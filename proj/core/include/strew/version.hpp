#pragma once

namespace strew {

inline constexpr const char* kToolName = "strew";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "strew-report/1";

} // namespace strew
