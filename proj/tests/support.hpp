#pragma once

#include <cstdint>
#include <vector>

#include "sasaki/fields/chart.hpp"

namespace test_support {

inline std::vector<sasaki::fields::Point> cube_points(int dim, std::size_t count, std::uint64_t seed,
                                                      double half_width = 1.0) {
  return sasaki::fields::sample_box(sasaki::fields::Box::cube(dim, half_width), count, seed);
}

}  // namespace test_support
