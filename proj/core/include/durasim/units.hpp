#pragma once

namespace durasim {

// All internal times are hours. Reports convert to years where noted.
inline constexpr double kHoursPerYear = 8760.0;

constexpr double years_to_hours(double years) { return years * kHoursPerYear; }
constexpr double hours_to_years(double hours) { return hours / kHoursPerYear; }

}  // namespace durasim
