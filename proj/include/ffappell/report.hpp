#pragma once

#include <string>
#include <vector>

#include "ffappell/verify.hpp"

namespace ffa {

inline constexpr const char* kToolVersion = "0.1.0";

/// JSON report, fixed key order. elapsed_s is serialized as 0.0 so that a
/// rerun with the same flags and seed produces a byte-identical file; wall
/// clock timings are console output, not report content.
std::string report_to_json(const VerificationReport& report);
std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// CSV: one row per suite, violation counts only.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace ffa
