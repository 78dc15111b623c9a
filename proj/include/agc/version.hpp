#pragma once

#include <string_view>

namespace agc {

inline constexpr std::string_view kToolName = "agc";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace agc
