#pragma once

namespace expind {

inline constexpr const char* kVersion = "expind 1.0.0";

}  // namespace expind
