#include "dcsim/temporal.hpp"

#include <cmath>

#include "dcsim/fft.hpp"
#include "dcsim/units.hpp"

namespace dcsim {

TemporalIntensity time_domain_intensity(const SpectralAmplitude& field) {
  const int n = field.grid.count;
  const double dw = field.grid.spacing;
  const double dt = 2.0 * kPi / (dw * n);

  std::vector<fft::cd> data = field.samples;
  fft::centered_transform(data);

  TemporalIntensity out;
  out.times.resize(n);
  out.values.resize(n);
  const double scale = dw / (2.0 * kPi);
  for (int k = 0; k < n; ++k) {
    out.times[k] = (k - n / 2) * dt;
    out.values[k] = std::norm(data[k] * scale);
  }
  return out;
}

double temporal_energy(const TemporalIntensity& intensity) {
  double acc = 0.0;
  for (double v : intensity.values) acc += v;
  const double dt =
      intensity.times.size() > 1 ? intensity.times[1] - intensity.times[0] : 0.0;
  return acc * dt;
}

double intensity_centroid(const TemporalIntensity& intensity) {
  double mass = 0.0;
  double moment = 0.0;
  for (std::size_t k = 0; k < intensity.values.size(); ++k) {
    mass += intensity.values[k];
    moment += intensity.values[k] * intensity.times[k];
  }
  return moment / mass;
}

double intensity_rms_width(const TemporalIntensity& intensity) {
  const double mean = intensity_centroid(intensity);
  double mass = 0.0;
  double second = 0.0;
  for (std::size_t k = 0; k < intensity.values.size(); ++k) {
    const double x = intensity.times[k] - mean;
    mass += intensity.values[k];
    second += intensity.values[k] * x * x;
  }
  return std::sqrt(second / mass);
}

double intensity_fwhm(const TemporalIntensity& intensity) {
  const auto& v = intensity.values;
  const auto& t = intensity.times;
  std::size_t peak = 0;
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] > v[peak]) peak = k;
  }
  const double half = v[peak] / 2.0;

  auto crossing = [&](int from, int step) {
    int k = from;
    while (true) {
      const int next = k + step;
      if (next < 0 || next >= static_cast<int>(v.size())) return t[k];
      if (v[next] < half) {
        // linear interpolation between k and next
        const double f = (v[k] - half) / (v[k] - v[next]);
        return t[k] + f * (t[next] - t[k]);
      }
      k = next;
    }
  };

  const double right = crossing(static_cast<int>(peak), 1);
  const double left = crossing(static_cast<int>(peak), -1);
  return right - left;
}

}  // namespace dcsim
