#pragma once

namespace rtopo {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rtopo
