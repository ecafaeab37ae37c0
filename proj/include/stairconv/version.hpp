#pragma once

namespace stairconv {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace stairconv
