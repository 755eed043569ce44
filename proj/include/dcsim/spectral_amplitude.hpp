#pragma once

#include <complex>
#include <vector>

#include "dcsim/frequency_grid.hpp"

namespace dcsim {

// Quadratic spectral phase phi(omega) = beta * (omega - reference)^2.
// beta is half the group-delay dispersion phi''.
struct DispersionSpec {
  double beta = 0.0;       // fs^2
  double reference = 0.0;  // rad/fs
};

// Complex field samples E(omega) on a grid. Also houses SHG spectra.
struct SpectralAmplitude {
  FrequencyGrid grid;
  std::vector<std::complex<double>> samples;
};

SpectralAmplitude gaussian_field_spectrum(const FrequencyGrid& grid,
                                          double center, double sigma);

SpectralAmplitude apply_quadratic_dispersion(SpectralAmplitude field,
                                             const DispersionSpec& disp);

SpectralAmplitude apply_delay(SpectralAmplitude field, double tau);

// Sum of |E|^2 * spacing / (2 pi); the convention time_domain_intensity
// preserves.
double spectral_energy(const SpectralAmplitude& field);

}  // namespace dcsim
