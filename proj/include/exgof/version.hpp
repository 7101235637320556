#pragma once

namespace exgof {
inline constexpr const char* kVersion = "0.1.0";
}
