#pragma once

namespace pebblelab {

// Bumping this invalidates every cached result.
inline constexpr const char* kEngineVersion = "0.1.0";

} // namespace pebblelab
