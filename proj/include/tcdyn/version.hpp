#pragma once

namespace tcdyn {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tcdyn
