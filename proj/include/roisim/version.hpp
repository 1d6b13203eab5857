#pragma once

namespace roisim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace roisim
