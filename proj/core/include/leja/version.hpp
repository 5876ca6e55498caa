#pragma once

namespace leja {

inline constexpr const char* version = "0.1.0";

} // namespace leja
