#pragma once

#include <numbers>

// Atomic units throughout: hbar = e = m_e = 1.
namespace lightstore::units {

inline constexpr double hbar = 1.0;
inline constexpr double c = 137.036;
inline constexpr double eps0 = 1.0 / (4.0 * std::numbers::pi);

} // namespace lightstore::units
