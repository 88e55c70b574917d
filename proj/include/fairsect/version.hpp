#pragma once

namespace fairsect {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fairsect
