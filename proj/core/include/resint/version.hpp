#pragma once

namespace resint {

inline constexpr const char* kEngineVersion = "resint/1.0.0";
inline constexpr const char* kProblemSchema = "resint-problem/1";
inline constexpr const char* kReportSchema = "resint-report/1";

}  // namespace resint
