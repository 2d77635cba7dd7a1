#pragma once

namespace triwalk {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace triwalk
