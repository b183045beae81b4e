#ifndef FCALG_VERSION_HPP
#define FCALG_VERSION_HPP

namespace fcalg {

inline constexpr const char* kToolName = "fcalg";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

}  // namespace fcalg

#endif
