#ifndef ECSMET_VERSION_HPP
#define ECSMET_VERSION_HPP

namespace ecsmet {

inline constexpr const char* kVersion = "0.1.0";

} // namespace ecsmet

#endif // ECSMET_VERSION_HPP
