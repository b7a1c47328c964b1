#pragma once

namespace hessbasis {

inline constexpr const char* kEngineVersion = "hessbasis 0.1.0";

} // namespace hessbasis
