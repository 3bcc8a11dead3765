#pragma once

namespace triadic {

inline constexpr const char* kToolName = "triadic";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

}  // namespace triadic
