#pragma once

namespace blipfield {

inline constexpr const char* version_string = "0.1.0";

}
