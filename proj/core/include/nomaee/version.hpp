#pragma once

namespace nomaee {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nomaee
