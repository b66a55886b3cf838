#pragma once

namespace gidx {

inline constexpr const char* kToolName = "gidx";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace gidx
