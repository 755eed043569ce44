#include "dcsim/biphoton.hpp"

#include <algorithm>
#include <cmath>

#include "dcsim/errors.hpp"
#include "dcsim/fft.hpp"
#include "dcsim/units.hpp"

namespace dcsim {

namespace {

using cd = std::complex<double>;

// Marginal moments along one axis of a row-major square array.
struct AxisMoments {
  double mean = 0.0;
  double variance = 0.0;
};

AxisMoments marginal_moments(const std::vector<double>& values,
                             const std::vector<double>& axis, bool along_rows) {
  const std::size_t n = axis.size();
  double total = 0.0;
  double first = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double w = values[r * n + c];
      total += w;
      first += w * axis[along_rows ? r : c];
    }
  }
  AxisMoments m;
  m.mean = first / total;
  double second = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double x = axis[along_rows ? r : c] - m.mean;
      second += values[r * n + c] * x * x;
    }
  }
  m.variance = second / total;
  return m;
}

}  // namespace

std::complex<double> JointSpectralAmplitude::amplitude_at(double omega1,
                                                          double omega2) const {
  const double u = omega1 - omega0;
  const double v = omega2 - omega0;
  const double s = u + v;
  const double magnitude =
      std::exp(-(u * u + v * v) / (2.0 * sigma * sigma) -
               s * s / (2.0 * sigma_c * sigma_c));
  return std::polar(magnitude, beta1 * u * u + beta2 * v * v);
}

double sum_axis_sigma(double sigma, double sigma_c) {
  return 1.0 / std::sqrt(1.0 / (2.0 * sigma * sigma) +
                         1.0 / (sigma_c * sigma_c));
}

JointSpectralAmplitude joint_spectral_amplitude(double omega0, double sigma,
                                                double sigma_c, int count,
                                                double coverage) {
  if (!(sigma_c > 0.0)) {
    throw InvalidParameter("pump bandwidth sigma_c must be positive");
  }
  JointSpectralAmplitude jsa;
  jsa.grid1 = make_frequency_grid(omega0, sigma, coverage, count);
  jsa.grid2 = jsa.grid1;
  jsa.grid_sum =
      make_frequency_grid(0.0, sum_axis_sigma(sigma, sigma_c), coverage, count);
  jsa.grid_diff =
      make_frequency_grid(0.0, std::sqrt(2.0) * sigma, coverage, count);
  jsa.omega0 = omega0;
  jsa.sigma = sigma;
  jsa.sigma_c = sigma_c;
  if (!jsa.grid1.covers(omega0 - 6.0 * sigma, omega0 + 6.0 * sigma)) {
    throw CoverageError("photon grid fails to cover the 6 sigma band");
  }

  jsa.samples.resize(static_cast<std::size_t>(count) * count);
  const double inv_2s2 = 1.0 / (2.0 * sigma * sigma);
  const double inv_2sc2 = 1.0 / (2.0 * sigma_c * sigma_c);
  for (int r = 0; r < count; ++r) {
    const double s = jsa.grid_sum.omega_at(r);
    for (int c = 0; c < count; ++c) {
      const double d = jsa.grid_diff.omega_at(c);
      const double u = 0.5 * (s + d);
      const double v = 0.5 * (s - d);
      jsa.samples[static_cast<std::size_t>(r) * count + c] =
          std::exp(-(u * u + v * v) * inv_2s2 - s * s * inv_2sc2);
    }
  }
  return jsa;
}

JointSpectralAmplitude apply_dispersion_jsa(JointSpectralAmplitude jsa,
                                            double beta1, double beta2) {
  const int count = jsa.grid_sum.count;
  if (beta1 != 0.0 || beta2 != 0.0) {
    for (int r = 0; r < count; ++r) {
      const double s = jsa.grid_sum.omega_at(r);
      for (int c = 0; c < count; ++c) {
        const double d = jsa.grid_diff.omega_at(c);
        const double u = 0.5 * (s + d);
        const double v = 0.5 * (s - d);
        jsa.samples[static_cast<std::size_t>(r) * count + c] *=
            std::polar(1.0, beta1 * u * u + beta2 * v * v);
      }
    }
  }
  jsa.beta1 += beta1;
  jsa.beta2 += beta2;
  return jsa;
}

TwoTimeDistribution two_time_probability(const JointSpectralAmplitude& jsa,
                                         bool parallel) {
  const int n = jsa.grid_sum.count;
  std::vector<cd> work = jsa.samples;
  fft::centered_transform_2d(work, n, parallel);

  // The exponent splits as s*(t1+t2)/2 + d*(t1-t2)/2, so the conjugate of
  // each axis is half the corresponding time coordinate.
  TwoTimeDistribution dist;
  const double da = 2.0 * kPi / (n * jsa.grid_sum.spacing);
  const double db = 2.0 * kPi / (n * jsa.grid_diff.spacing);
  dist.time_sum.resize(n);
  dist.time_diff.resize(n);
  for (int k = 0; k < n; ++k) {
    dist.time_sum[k] = 2.0 * (k - n / 2) * da;
    dist.time_diff[k] = 2.0 * (k - n / 2) * db;
  }
  dist.cell_area = 2.0 * da * db;

  dist.values.resize(work.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    dist.values[i] = std::norm(work[i]);
    peak = std::max(peak, dist.values[i]);
  }

  double edge = 0.0;
  for (int k = 0; k < n; ++k) {
    edge = std::max({edge, dist.values[static_cast<std::size_t>(0) * n + k],
                     dist.values[static_cast<std::size_t>(n - 1) * n + k],
                     dist.values[static_cast<std::size_t>(k) * n + 0],
                     dist.values[static_cast<std::size_t>(k) * n + (n - 1)]});
  }
  if (edge > 1e-6 * peak) {
    throw WindowOverflow(
        "two-photon distribution leaks past the time window; "
        "increase the sample count");
  }

  double total = 0.0;
  for (double v : dist.values) total += v;
  const double scale = 1.0 / (total * dist.cell_area);
  for (double& v : dist.values) v *= scale;
  return dist;
}

double time_difference_variance(const TwoTimeDistribution& dist) {
  return marginal_moments(dist.values, dist.time_diff, false).variance;
}

double time_sum_variance(const TwoTimeDistribution& dist) {
  return marginal_moments(dist.values, dist.time_sum, true).variance;
}

double quantum_variance_closed_form(double sigma, double sigma_c,
                                    double beta1) {
  const double s2 = sigma * sigma;
  const double sc2 = sigma_c * sigma_c;
  return (1.0 + 4.0 * beta1 * beta1 * s2 * s2 * sc2 / (2.0 * s2 + sc2)) / s2;
}

ApproxVariance approx_variance_small_pump(double sigma, double sigma_c,
                                          double beta1) {
  ApproxVariance out;
  out.value = (1.0 + 2.0 * beta1 * beta1 * sigma * sigma * sigma_c * sigma_c) /
              (sigma * sigma);
  out.within_regime = sigma_c <= sigma / 10.0;
  return out;
}

}  // namespace dcsim
