#pragma once

namespace palcheck {

// Embedded in every JSON report for provenance.
inline constexpr const char* kToolName = "palcheck";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace palcheck
