#pragma once

#include <string_view>

namespace apollodom {

inline constexpr std::string_view tool_name = "apollodom";
inline constexpr std::string_view tool_version = "0.1.0";
inline constexpr int record_schema_version = 1;

} // namespace apollodom
