#pragma once

namespace obslab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace obslab
