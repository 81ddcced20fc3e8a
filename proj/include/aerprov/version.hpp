#pragma once

namespace aerprov {

inline constexpr const char* kToolName = "aerprov";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace aerprov
