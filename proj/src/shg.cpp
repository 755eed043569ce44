#include "dcsim/shg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dcsim/fft.hpp"
#include "dcsim/units.hpp"

namespace dcsim {

namespace {

using cd = std::complex<double>;

int next_pow2(int n) {
  int p = 1;
  while (p < n) p *= 2;
  return p;
}

// rms width of the inputs inferred from a grid built by make_frequency_grid.
double sigma_from_grid(const FrequencyGrid& grid) {
  const double cover = grid.coverage > 0.0 ? grid.coverage : 8.0;
  return grid.spacing * (grid.count - 1) / (2.0 * cover);
}

}  // namespace

SpectralAmplitude shg_spectrum(const SpectralAmplitude& field1,
                               const SpectralAmplitude& field2,
                               ConvolutionPath path) {
  if (!field1.grid.same_layout(field2.grid)) {
    throw GridMismatch("shg inputs must share one grid");
  }
  const FrequencyGrid& g = field1.grid;
  const int n = g.count;
  const double dw = g.spacing;

  const double sigma = sigma_from_grid(g);
  const double half_width = 8.0 * std::sqrt(2.0) * sigma;
  const int half_count = std::min(n - 1, static_cast<int>(std::ceil(half_width / dw)));
  const int m = 2 * half_count + 1;

  SpectralAmplitude out;
  out.grid.center = 2.0 * g.center;
  out.grid.spacing = dw;
  out.grid.count = m;
  out.grid.coverage = half_count * dw / (std::sqrt(2.0) * sigma);
  out.samples.assign(m, cd{0.0, 0.0});

  // Sample r of the output collects pairs with j + i = r - half_count + n,
  // i.e. omega_j + omega_i = out.omega_at(r).
  if (path == ConvolutionPath::direct) {
    for (int r = 0; r < m; ++r) {
      cd acc{0.0, 0.0};
      const int offset = r - half_count + n;
      const int j_lo = std::max(0, offset - (n - 1));
      const int j_hi = std::min(n - 1, offset);
      for (int j = j_lo; j <= j_hi; ++j) {
        acc += field1.samples[j] * field2.samples[offset - j];
      }
      out.samples[r] = acc * dw;
    }
    return out;
  }

  const int l = next_pow2(2 * n);
  std::vector<cd> a(l, cd{0.0, 0.0});
  std::vector<cd> b(l, cd{0.0, 0.0});
  std::copy(field1.samples.begin(), field1.samples.end(), a.begin());
  std::copy(field2.samples.begin(), field2.samples.end(), b.begin());
  fft::transform(a, -1);
  fft::transform(b, -1);
  for (int k = 0; k < l; ++k) a[k] *= b[k];
  fft::transform(a, +1);
  const double scale = dw / l;
  for (int r = 0; r < m; ++r) {
    out.samples[r] = a[r - half_count + n] * scale;
  }
  return out;
}

double monochromator_signal(const SpectralAmplitude& shg,
                            const MonochromatorSpec& mono) {
  const FrequencyGrid& g = shg.grid;
  double acc = 0.0;
  for (int k = 0; k < g.count; ++k) {
    const double x = g.omega_at(k) - mono.center;
    const double response = std::exp(-x * x / (2.0 * mono.sigma_s * mono.sigma_s));
    const double weight = (k == 0 || k == g.count - 1) ? 0.5 : 1.0;
    acc += weight * response * std::norm(shg.samples[k]);
  }
  return acc * g.spacing;
}

double classical_trace_closed_form(double sigma, double sigma_s, double beta1,
                                   double tau) {
  const double s2 = sigma * sigma;
  const double ss2 = sigma_s * sigma_s;
  const double numerator = s2 * (s2 + ss2) * tau * tau;
  const double denominator =
      2.0 * (s2 + ss2 + 4.0 * beta1 * beta1 * s2 * s2 * ss2);
  return std::exp(-numerator / denominator);
}

double classical_variance_closed_form(double sigma, double sigma_s,
                                      double beta1) {
  const double s2 = sigma * sigma;
  const double ss2 = sigma_s * sigma_s;
  return (1.0 + 4.0 * beta1 * beta1 * s2 * s2 * ss2 / (s2 + ss2)) / s2;
}

double general_variance_unequal_dispersion(double sigma, double beta1,
                                           double beta2) {
  const double s2 = sigma * sigma;
  const double bsum = beta1 + beta2;
  return (1.0 + bsum * bsum * s2 * s2) / s2;
}

double expected_scan_variance(double sigma, double sigma_s, double beta1,
                              double beta2) {
  const double s2 = sigma * sigma;
  const double k = 1.0 + (beta1 + beta2) * (beta1 + beta2) * s2 * s2;
  if (sigma_s == 0.0) return k / s2;
  const double bdiff2 = (beta1 - beta2) * (beta1 - beta2);
  const double p =
      1.0 / (sigma_s * sigma_s) + 1.0 / s2 + bdiff2 * s2 / k;
  const double x = bdiff2 * s2 / (k * p);
  return k / (s2 * (1.0 - x));
}

std::vector<double> symmetric_delays(double half_span, int count) {
  if (!(half_span > 0.0) || count < 2) {
    throw InvalidParameter("delay sampling needs a positive span and >= 2 points");
  }
  std::vector<double> delays(count);
  for (int k = 0; k < count; ++k) {
    delays[k] = (2 * k - (count - 1)) * half_span / (count - 1);
  }
  return delays;
}

CorrelationTrace delay_scan(double sigma, double omega0, double beta1,
                            double beta2, const MonochromatorSpec& mono,
                            const std::vector<double>& delays,
                            const ScanOptions& options) {
  if (!(sigma > 0.0) || !(omega0 > 0.0)) {
    throw InvalidParameter("delay scan needs sigma > 0 and omega0 > 0");
  }
  if (!(mono.sigma_s > 0.0)) {
    throw InvalidParameter("monochromator resolution must be positive");
  }
  if (delays.size() < 32) {
    throw InvalidParameter("a correlation trace needs at least 32 delay samples");
  }
  for (std::size_t i = 1; i < delays.size(); ++i) {
    if (!(delays[i] > delays[i - 1])) {
      throw InvalidParameter("delays must be strictly increasing");
    }
  }
  const double variance =
      expected_scan_variance(sigma, mono.sigma_s, beta1, beta2);
  const double expected_fwhm = fwhm_from_rms(std::sqrt(variance));
  if (delays.back() - delays.front() < 4.0 * expected_fwhm) {
    throw InvalidParameter(
        "delay span must cover at least 4x the expected trace width (" +
        std::to_string(expected_fwhm) + " fs)");
  }

  const FrequencyGrid grid =
      make_frequency_grid(omega0, sigma, options.coverage, options.grid_count);
  const int n = grid.count;
  const double dw = grid.spacing;
  const double s2 = sigma * sigma;
  const double ss = mono.sigma_s;

  const SpectralAmplitude arm1 = apply_quadratic_dispersion(
      gaussian_field_spectrum(grid, omega0, sigma), {beta1, omega0});

  // Monochromator quadrature window. The S(omega)|E_SHG|^2 product is a
  // Gaussian in omega whose center drifts with tau at rate
  // (beta1-beta2) sigma^2 sigma_s^2 / K and whose width is 1/sqrt(p); the
  // window must track both or the trace tails are clipped.
  const double tau_max =
      std::max(std::abs(delays.front()), std::abs(delays.back()));
  const double k_sum = 1.0 + (beta1 + beta2) * (beta1 + beta2) * s2 * s2;
  const double bdiff = std::abs(beta1 - beta2);
  const double drift = bdiff * s2 * ss * ss * tau_max / k_sum;
  const double half_width =
      std::min(6.0 * ss + drift, 8.0 * std::sqrt(2.0) * sigma);
  const double p = 1.0 / (ss * ss) + 1.0 / s2 + bdiff * bdiff * s2 / k_sum;
  const double h = std::min({dw, ss / 8.0, 0.5 / std::sqrt(p)});
  const int half_count = static_cast<int>(std::ceil(half_width / h));
  const int m = 2 * half_count + 1;

  std::vector<double> window_omega(m);
  std::vector<double> response(m);
  for (int i = 0; i < m; ++i) {
    window_omega[i] = mono.center + (i - half_count) * h;
    const double x = window_omega[i] - mono.center;
    const double weight = (i == 0 || i == m - 1) ? 0.5 : 1.0;
    response[i] = weight * std::exp(-x * x / (2.0 * ss * ss));
  }

  // Arm 2 evaluated at the convolution's shifted arguments omega_m - omega_j,
  // which fall off the base grid; the Gaussian and its phase are analytic.
  const std::size_t tile_rows =
      std::max<std::size_t>(1, (std::size_t{192} << 20) / (16 * n));
  std::vector<cd> tile(std::min<std::size_t>(tile_rows, m) * n);

  const std::size_t delay_count = delays.size();
  std::vector<double> acc(delay_count, 0.0);

  for (int m0 = 0; m0 < m; m0 += static_cast<int>(tile_rows)) {
    const int rows = std::min<int>(static_cast<int>(tile_rows), m - m0);

#pragma omp parallel for if (options.parallel) schedule(static)
    for (int r = 0; r < rows; ++r) {
      cd* row = &tile[static_cast<std::size_t>(r) * n];
      const double wm = window_omega[m0 + r];
      for (int j = 0; j < n; ++j) {
        const double x = wm - grid.omega_at(j) - omega0;
        row[j] = std::polar(std::exp(-x * x / (2.0 * s2)), beta2 * x * x);
      }
    }

#pragma omp parallel for if (options.parallel) schedule(static)
    for (std::size_t i = 0; i < delay_count; ++i) {
      std::vector<cd> delayed(n);
      const double tau = delays[i];
      for (int j = 0; j < n; ++j) {
        delayed[j] = arm1.samples[j] * std::polar(1.0, -grid.omega_at(j) * tau);
      }
      double part = 0.0;
      for (int r = 0; r < rows; ++r) {
        const cd* row = &tile[static_cast<std::size_t>(r) * n];
        cd shg{0.0, 0.0};
        for (int j = 0; j < n; ++j) shg += delayed[j] * row[j];
        part += response[m0 + r] * std::norm(shg);
      }
      acc[i] += part;
    }
  }

  const double peak = *std::max_element(acc.begin(), acc.end());
  if (!(peak > 0.0)) {
    throw InvalidParameter("delay scan produced an all-zero trace");
  }
  CorrelationTrace trace;
  trace.delays = delays;
  trace.intensities.resize(delay_count);
  for (std::size_t i = 0; i < delay_count; ++i) {
    trace.intensities[i] = acc[i] / peak;
  }
  return trace;
}

}  // namespace dcsim
