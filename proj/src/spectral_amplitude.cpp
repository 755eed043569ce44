#include "dcsim/spectral_amplitude.hpp"

#include <cmath>
#include <string>

#include "dcsim/units.hpp"

namespace dcsim {

SpectralAmplitude gaussian_field_spectrum(const FrequencyGrid& grid,
                                          double center, double sigma) {
  if (!(sigma > 0.0)) {
    throw InvalidParameter("gaussian spectrum needs sigma > 0");
  }
  if (!grid.covers(center - 6.0 * sigma, center + 6.0 * sigma)) {
    throw CoverageError(
        "grid does not cover the spectrum out to 6 sigma; widen the grid or "
        "raise its coverage");
  }
  SpectralAmplitude field;
  field.grid = grid;
  field.samples.resize(grid.count);
  for (int k = 0; k < grid.count; ++k) {
    const double x = grid.omega_at(k) - center;
    field.samples[k] = std::exp(-x * x / (2.0 * sigma * sigma));
  }
  return field;
}

SpectralAmplitude apply_quadratic_dispersion(SpectralAmplitude field,
                                             const DispersionSpec& disp) {
  if (disp.beta == 0.0) return field;
  for (int k = 0; k < field.grid.count; ++k) {
    const double x = field.grid.omega_at(k) - disp.reference;
    field.samples[k] *= std::polar(1.0, disp.beta * x * x);
  }
  return field;
}

SpectralAmplitude apply_delay(SpectralAmplitude field, double tau) {
  if (tau == 0.0) return field;
  for (int k = 0; k < field.grid.count; ++k) {
    field.samples[k] *= std::polar(1.0, -field.grid.omega_at(k) * tau);
  }
  return field;
}

double spectral_energy(const SpectralAmplitude& field) {
  double acc = 0.0;
  for (const auto& s : field.samples) acc += std::norm(s);
  return acc * field.grid.spacing / (2.0 * kPi);
}

}  // namespace dcsim
