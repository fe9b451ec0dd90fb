#pragma once

namespace genwait {
inline constexpr const char* kVersion = "0.1.0";
}
