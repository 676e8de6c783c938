#pragma once

namespace xferlab {

inline constexpr const char* kVersion = "0.1.0";

} // namespace xferlab
