#pragma once

namespace gerbe {

inline constexpr const char* kToolName = "gerbe";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace gerbe
