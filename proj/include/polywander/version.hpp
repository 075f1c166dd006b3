#pragma once

namespace polywander {

inline constexpr const char kToolName[] = "polywander";
inline constexpr const char kToolVersion[] = "0.1.0";

}  // namespace polywander
