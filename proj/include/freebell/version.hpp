#pragma once

namespace freebell {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace freebell
