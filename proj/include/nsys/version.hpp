#pragma once

namespace nsys {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nsys
