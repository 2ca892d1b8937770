#pragma once

#include <string_view>

namespace indexforge {

inline constexpr std::string_view kToolName = "indexforge";
inline constexpr std::string_view kVersion = "0.1.0";

// Reproducibility metadata echoed into every run manifest.
inline constexpr std::string_view kUniformMapping = "(x >> 11) * 2^-53";
inline constexpr std::string_view kSeedMixer = "splitmix64";
inline constexpr std::string_view kPcaLoadingConvention = "absolute";
inline constexpr std::string_view kDeaVertexNote =
    "averaged DEA weights depend on the optimal vertex chosen by the "
    "deterministic Bland's-rule simplex";

}  // namespace indexforge
