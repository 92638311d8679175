#pragma once

#include <span>

namespace coarse {

/// Ordinary least-squares slope of y against x. Throws std::invalid_argument
/// for fewer than two points, mismatched lengths or constant x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

/// Slope of log y against log x; every value must be positive.
double log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace coarse
