#pragma once

namespace hcn {

inline constexpr const char* kEngineVersion = "0.3.0";

}  // namespace hcn
