#pragma once

#include <string_view>

namespace indyn {

inline constexpr std::string_view tool_name = "indyn";
inline constexpr std::string_view tool_version = "0.1.0";

}  // namespace indyn
