#pragma once

namespace liespec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace liespec
