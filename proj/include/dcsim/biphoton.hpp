#pragma once

#include <complex>
#include <vector>

#include "dcsim/frequency_grid.hpp"

namespace dcsim {

// Two-photon spectral state
//   f(w1,w2) = exp(-(w1-w0)^2/(2s^2)) exp(-(w2-w0)^2/(2s^2)) exp(-(w1+w2-2w0)^2/(2sc^2))
// times any accumulated quadratic phases. Samples are stored on the rotated
// lattice s = w1+w2-2w0 (axis sized to the sum bandwidth sigma_se) and
// d = w1-w2 (sized to sqrt(2)*sigma): the two directions carry wildly
// different scales, and a tensor (w1,w2) grid cannot resolve both. grid1 and
// grid2 describe the per-photon coverage.
struct JointSpectralAmplitude {
  FrequencyGrid grid1;  // photon-1 coverage metadata
  FrequencyGrid grid2;
  FrequencyGrid grid_sum;   // s axis
  FrequencyGrid grid_diff;  // d axis
  std::vector<std::complex<double>> samples;  // row s, column d
  double omega0 = 0.0;
  double sigma = 0.0;
  double sigma_c = 0.0;
  double beta1 = 0.0;  // accumulated dispersion, photon 1
  double beta2 = 0.0;

  // Analytic value at an arbitrary point, including accumulated phases.
  std::complex<double> amplitude_at(double omega1, double omega2) const;
};

// rms width of the w1+w2 axis: (1/(2 sigma^2) + 1/sigma_c^2)^(-1/2).
double sum_axis_sigma(double sigma, double sigma_c);

JointSpectralAmplitude joint_spectral_amplitude(double omega0, double sigma,
                                                double sigma_c, int count,
                                                double coverage = 8.0);

JointSpectralAmplitude apply_dispersion_jsa(JointSpectralAmplitude jsa,
                                            double beta1, double beta2);

// Two-photon detection density. Stored on the conjugate rotated axes
// time_sum = t1+t2 and time_diff = t1-t2; the (t1,t2) lattice cell area is
// (time_sum step)*(time_diff step)/2, and sum(values)*cell_area = 1.
struct TwoTimeDistribution {
  std::vector<double> time_sum;   // fs
  std::vector<double> time_diff;  // fs
  std::vector<double> values;     // density, row time_sum, column time_diff
  double cell_area = 0.0;         // fs^2 in the (t1,t2) plane
};

// |2D inverse transform of the JSA|^2, normalized. Throws WindowOverflow when
// the distribution's tails exceed 1e-6 of peak at the window edge (the grid
// is then too small for the requested dispersion or bandwidths; increase the
// sample count).
TwoTimeDistribution two_time_probability(const JointSpectralAmplitude& jsa,
                                         bool parallel = true);

// E[(t1-t2)^2] - E[t1-t2]^2 by direct summation.
double time_difference_variance(const TwoTimeDistribution& dist);

// Marginal moments of the time_sum axis (diagnostic counterpart).
double time_sum_variance(const TwoTimeDistribution& dist);

// (1/sigma^2)(1 + 4 beta1^2 sigma^4 sigma_c^2/(2 sigma^2 + sigma_c^2)),
// the beta2 = -beta1 closed form.
double quantum_variance_closed_form(double sigma, double sigma_c, double beta1);

// Small-pump approximation (1/sigma^2)(1 + 2 beta1^2 sigma^2 sigma_c^2),
// valid for sigma_c <= sigma/10; outside that regime the flag is cleared
// rather than throwing.
struct ApproxVariance {
  double value = 0.0;  // fs^2
  bool within_regime = true;
};
ApproxVariance approx_variance_small_pump(double sigma, double sigma_c,
                                          double beta1);

}  // namespace dcsim
