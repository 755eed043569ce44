#include "dcsim/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "dcsim/units.hpp"

namespace dcsim {

namespace {

// Solve the 4x4 normal equations in place. Partial pivoting; the matrix is
// symmetric positive definite away from degenerate fits.
bool solve4(std::array<std::array<double, 4>, 4>& a, std::array<double, 4>& b) {
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-300) return false;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = col + 1; r < 4; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int col = 3; col >= 0; --col) {
    double acc = b[col];
    for (int c = col + 1; c < 4; ++c) acc -= a[col][c] * b[c];
    b[col] = acc / a[col][col];
  }
  return true;
}

double sum_squared_residuals(const CorrelationTrace& trace, double amplitude,
                             double center, double width, double baseline) {
  double ssr = 0.0;
  for (std::size_t i = 0; i < trace.delays.size(); ++i) {
    const double x = (trace.delays[i] - center) / width;
    const double model = amplitude * std::exp(-0.5 * x * x) + baseline;
    const double r = trace.intensities[i] - model;
    ssr += r * r;
  }
  return ssr;
}

GaussianFit moment_estimate(const CorrelationTrace& trace) {
  GaussianFit fit;
  const auto [lo, hi] =
      std::minmax_element(trace.intensities.begin(), trace.intensities.end());
  fit.baseline = *lo;
  fit.amplitude = *hi - *lo;

  double mass = 0.0;
  double first = 0.0;
  for (std::size_t i = 0; i < trace.delays.size(); ++i) {
    const double w = trace.intensities[i] - fit.baseline;
    mass += w;
    first += w * trace.delays[i];
  }
  fit.center = first / mass;
  double second = 0.0;
  for (std::size_t i = 0; i < trace.delays.size(); ++i) {
    const double x = trace.delays[i] - fit.center;
    second += (trace.intensities[i] - fit.baseline) * x * x;
  }
  fit.rms_width = std::sqrt(second / mass);
  fit.fwhm = fwhm_from_rms(fit.rms_width);
  return fit;
}

}  // namespace

GaussianFit fit_gaussian_trace(const CorrelationTrace& trace,
                               const FitOptions& options) {
  const std::size_t n = trace.delays.size();
  if (n != trace.intensities.size() || n < 8) {
    throw InvalidParameter("fit needs matched delay and intensity arrays");
  }

  const auto [lo, hi] =
      std::minmax_element(trace.intensities.begin(), trace.intensities.end());
  const double half = *lo + 0.5 * (*hi - *lo);
  int above = 0;
  for (double v : trace.intensities) {
    if (v > half) ++above;
  }
  if (*hi <= *lo || above < 8) {
    throw InsufficientSampling(
        "fewer than 8 samples above half maximum; the trace is too coarse "
        "or featureless to fit");
  }

  GaussianFit fit = moment_estimate(trace);
  double amplitude = fit.amplitude;
  double center = fit.center;
  double width = fit.rms_width;
  double baseline = fit.baseline;
  double ssr = sum_squared_residuals(trace, amplitude, center, width, baseline);

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    std::array<std::array<double, 4>, 4> jtj{};
    std::array<double, 4> jtr{};
    for (std::size_t i = 0; i < n; ++i) {
      const double x = (trace.delays[i] - center) / width;
      const double g = std::exp(-0.5 * x * x);
      const double r = trace.intensities[i] - (amplitude * g + baseline);
      const std::array<double, 4> j = {g, amplitude * g * x / width,
                                       amplitude * g * x * x / width, 1.0};
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) jtj[a][b] += j[a] * j[b];
        jtr[a] += j[a] * r;
      }
    }
    std::array<double, 4> step = jtr;
    if (!solve4(jtj, step)) {
      throw FitFailure("gaussian fit normal equations are singular", fit);
    }

    double damping = 1.0;
    double next_ssr = ssr;
    double na = amplitude, nc = center, nw = width, nb = baseline;
    for (int halvings = 0; halvings < 24; ++halvings) {
      na = amplitude + damping * step[0];
      nc = center + damping * step[1];
      nw = width + damping * step[2];
      nb = baseline + damping * step[3];
      next_ssr = sum_squared_residuals(trace, na, nc, nw, nb);
      if (next_ssr <= ssr && nw != 0.0) break;
      damping *= 0.5;
    }

    const double scale = std::max({std::abs(amplitude), std::abs(na), 1e-12});
    const double wscale = std::max({std::abs(width), std::abs(nw), 1e-12});
    const double move = std::max(
        {std::abs(na - amplitude) / scale, std::abs(nw - width) / wscale,
         std::abs(nc - center) / wscale, std::abs(nb - baseline) / scale});
    amplitude = na;
    center = nc;
    width = nw;
    baseline = nb;
    ssr = next_ssr;

    if (move < options.relative_tolerance) {
      fit.amplitude = amplitude;
      fit.center = center;
      fit.rms_width = std::abs(width);
      fit.fwhm = fwhm_from_rms(fit.rms_width);
      fit.baseline = baseline;
      fit.residual_rms = std::sqrt(ssr / n);
      fit.iterations = iter;
      return fit;
    }
  }
  throw FitFailure("gaussian fit did not converge", fit);
}

double franson_bound(double initial_variance, double beta) {
  if (!(initial_variance > 0.0)) {
    throw InvalidParameter("initial variance must be positive");
  }
  return initial_variance + 4.0 * beta * beta / initial_variance;
}

VarianceReport check_violation(double measured_variance,
                               double initial_variance, double beta,
                               double tolerance, DetectionKind detection) {
  if (!(measured_variance >= 0.0)) {
    throw InvalidParameter("measured variance must be nonnegative");
  }
  if (!(tolerance >= 0.0) || !(tolerance < 1.0)) {
    throw InvalidParameter("tolerance must lie in [0, 1)");
  }
  VarianceReport report;
  report.measured_variance = measured_variance;
  report.initial_variance = initial_variance;
  report.beta = beta;
  report.bound = franson_bound(initial_variance, beta);
  report.tolerance = tolerance;
  report.detection = detection;
  report.violated = detection == DetectionKind::nonlocal_coincidence &&
                    measured_variance < report.bound * (1.0 - tolerance);
  return report;
}

double cancellation_persistence_bound(double sigma, double sigma_narrow) {
  if (!(sigma > 0.0) || !(sigma_narrow > 0.0)) {
    throw InvalidParameter("bandwidths must be positive");
  }
  return 1.0 / (sigma * sigma_narrow);
}

}  // namespace dcsim
