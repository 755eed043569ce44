#pragma once

#include "dcsim/errors.hpp"

namespace dcsim {

// Uniform angular-frequency sampling window. Samples sit at
// center + (k - count/2) * spacing for k in [0, count); with even count the
// set is asymmetric by one sample on the low side, which the centered FFT
// convention requires. Total span (count-1)*spacing equals 2*coverage*sigma
// at construction.
struct FrequencyGrid {
  double center = 0.0;   // rad/fs
  double spacing = 0.0;  // rad/fs
  int count = 0;
  double coverage = 0.0;  // recorded multiples of sigma, for convergence tests

  double omega_at(int k) const { return center + (k - count / 2) * spacing; }
  double min_omega() const { return omega_at(0); }
  double max_omega() const { return omega_at(count - 1); }

  // Coverage test with one-spacing slack per side.
  bool covers(double lo, double hi) const {
    return min_omega() <= lo + spacing && max_omega() >= hi - spacing;
  }

  bool same_layout(const FrequencyGrid& other) const {
    return center == other.center && spacing == other.spacing &&
           count == other.count;
  }
};

FrequencyGrid make_frequency_grid(double center, double sigma, double coverage,
                                  int count);

}  // namespace dcsim
