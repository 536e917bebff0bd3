#pragma once

#include <string_view>

namespace xpoly {

inline constexpr std::string_view tool_name = "xpoly";
inline constexpr std::string_view tool_version = "0.1.0";

} // namespace xpoly
