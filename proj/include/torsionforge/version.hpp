#pragma once

namespace torsionforge {

inline constexpr const char* kName = "torsion-forge";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace torsionforge
