#pragma once

namespace spindec {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace spindec
