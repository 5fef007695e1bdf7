#pragma once

namespace schubfact {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace schubfact
