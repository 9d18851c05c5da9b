#pragma once

namespace wignerlab {

inline constexpr const char* version = "1.0.0";

}
