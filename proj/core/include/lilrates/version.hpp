#pragma once

namespace lilrates {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lilrates
