#include "dcsim/frequency_grid.hpp"

#include <string>

namespace dcsim {

FrequencyGrid make_frequency_grid(double center, double sigma, double coverage,
                                  int count) {
  if (!(sigma > 0.0)) {
    throw InvalidParameter("frequency grid needs sigma > 0, got " +
                           std::to_string(sigma));
  }
  if (!(coverage >= 6.0)) {
    throw InvalidParameter("frequency grid coverage must be >= 6 sigma, got " +
                           std::to_string(coverage));
  }
  if (count < 16) {
    throw InvalidParameter("frequency grid needs at least 16 samples, got " +
                           std::to_string(count));
  }
  FrequencyGrid grid;
  grid.center = center;
  grid.spacing = 2.0 * coverage * sigma / (count - 1);
  grid.count = count;
  grid.coverage = coverage;
  return grid;
}

}  // namespace dcsim
