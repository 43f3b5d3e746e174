#pragma once

#include <cmath>
#include <vector>

#include "rqit/errors.hpp"

namespace rqit {

// Inclusive arithmetic grid min, min + step, ..., <= max (with a small slack so
// that max itself is kept when it lies on the grid).
struct Grid {
  double min = 0.0;
  double max = 0.0;
  double step = 0.01;

  std::vector<double> values() const {
    if (!(step > 0.0)) throw ArgumentError("grid step must be positive");
    if (max < min) throw ArgumentError("grid max must not be below min");
    const auto count = static_cast<long>(std::floor((max - min) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) out.push_back(min + static_cast<double>(i) * step);
    return out;
  }
};

}  // namespace rqit
