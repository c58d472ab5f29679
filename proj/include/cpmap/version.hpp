#pragma once

namespace cpmap {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace cpmap
