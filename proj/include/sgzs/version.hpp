#ifndef SGZS_VERSION_HPP_
#define SGZS_VERSION_HPP_

namespace sgzs {

inline constexpr char kVersion[] = "0.1.0";

}  // namespace sgzs

#endif  // SGZS_VERSION_HPP_
