#pragma once

namespace akbk {

inline constexpr const char* kToolName = "akbk";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace akbk
