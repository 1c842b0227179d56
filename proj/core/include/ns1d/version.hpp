#pragma once

#include <string_view>

namespace ns1d {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace ns1d
