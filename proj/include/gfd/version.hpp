#pragma once

namespace gfd {

inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace gfd
