#pragma once

namespace metarich {

inline constexpr const char* version = "0.1.0";

}
