#pragma once

namespace bingham {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bingham
