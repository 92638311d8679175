#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "coarse/metric.hpp"
#include "oracles.hpp"

namespace testing_helpers {

inline oracle::Matrix to_matrix(const coarse::MetricSpace& s) {
  oracle::Matrix m(s.size(), std::vector<double>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) m[i][j] = s(i, j);
  return m;
}

inline std::vector<std::string> numbered(std::size_t n, const std::string& prefix = "p") {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

// Points 0..n-1 on a line with unit spacing.
inline coarse::SpacePtr segment(std::size_t n, const std::string& prefix = "p") {
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = i > j ? double(i - j) : double(j - i);
  return coarse::make_space(numbered(n, prefix), std::move(d));
}

inline std::vector<coarse::PointIndex> iota(std::size_t n) {
  std::vector<coarse::PointIndex> v(n);
  std::iota(v.begin(), v.end(), coarse::PointIndex{0});
  return v;
}

}  // namespace testing_helpers
