#pragma once

#include <string_view>

namespace s1yamabe {
inline constexpr std::string_view kVersion = "0.1.0";
}
