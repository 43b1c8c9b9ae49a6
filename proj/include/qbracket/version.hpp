#pragma once

namespace qbracket {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qbracket
