#pragma once

namespace fullerene {

inline constexpr const char* kVersion = "0.9.0";

}  // namespace fullerene
