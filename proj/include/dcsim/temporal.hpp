#pragma once

#include <vector>

#include "dcsim/spectral_amplitude.hpp"

namespace dcsim {

// Time-domain intensity samples on the grid conjugate to a frequency grid.
// Time step is 2 pi / (grid spacing * count).
struct TemporalIntensity {
  std::vector<double> times;   // fs
  std::vector<double> values;  // arbitrary units, >= 0
};

// |inverse transform of the samples|^2 with the e^{-i omega t} synthesis
// convention; energy matches spectral_energy to better than 1e-9.
TemporalIntensity time_domain_intensity(const SpectralAmplitude& field);

double temporal_energy(const TemporalIntensity& intensity);

// rms width from second moments; exact for Gaussian profiles.
double intensity_rms_width(const TemporalIntensity& intensity);

// Full width at half maximum by linear interpolation of the half crossings.
double intensity_fwhm(const TemporalIntensity& intensity);

// Intensity-weighted mean time.
double intensity_centroid(const TemporalIntensity& intensity);

}  // namespace dcsim
