#pragma once

#include <vector>

#include "dcsim/spectral_amplitude.hpp"

namespace dcsim {

// Gaussian monochromator response S(omega) = exp(-(omega-center)^2/(2 sigma_s^2)).
struct MonochromatorSpec {
  double center = 0.0;   // rad/fs, nominally 2*omega0
  double sigma_s = 0.0;  // rad/fs, rms resolution
};

// Detected intensity versus delay, normalized to unit peak.
struct CorrelationTrace {
  std::vector<double> delays;       // fs, strictly increasing
  std::vector<double> intensities;  // in [0, 1]
};

enum class ConvolutionPath { fourier, direct };

// E_SHG(omega) = integral E1(omega') E2(omega - omega') domega' on a grid
// centered at twice the input center, same spacing, half-width 8*sqrt(2)*sigma
// inferred from the span of the inputs. Fourier and direct paths agree to
// 1e-9 relative.
SpectralAmplitude shg_spectrum(const SpectralAmplitude& field1,
                               const SpectralAmplitude& field2,
                               ConvolutionPath path = ConvolutionPath::fourier);

// integral S(omega) |E_SHG(omega)|^2 domega by trapezoidal quadrature over
// the spectrum's own grid. The caller supplies a grid that resolves sigma_s.
double monochromator_signal(const SpectralAmplitude& shg,
                            const MonochromatorSpec& mono);

struct ScanOptions {
  int grid_count = 4096;
  double coverage = 8.0;
  bool parallel = true;
};

// Delay scan of the two-arm SHG signal: arm 1 carries beta1 and the delay,
// arm 2 carries beta2; their convolution is filtered by the monochromator at
// every delay. Delay points are independent and evaluate in parallel when
// requested, bit-identical to the serial path.
CorrelationTrace delay_scan(double sigma, double omega0, double beta1,
                            double beta2, const MonochromatorSpec& mono,
                            const std::vector<double>& delays,
                            const ScanOptions& options = {});

// Normalized trace value for beta2 = -beta1:
// exp[-sigma^2 (sigma^2+sigma_s^2) tau^2 / (2 (sigma^2+sigma_s^2+4 beta1^2 sigma^4 sigma_s^2))].
double classical_trace_closed_form(double sigma, double sigma_s, double beta1,
                                   double tau);

// Variance of that trace: (1/sigma^2)(1 + 4 beta1^2 sigma^4 sigma_s^2/(sigma^2+sigma_s^2)).
double classical_variance_closed_form(double sigma, double sigma_s,
                                      double beta1);

// sigma_s -> 0 limit for arbitrary arms: (1/sigma^2)(1 + (beta1+beta2)^2 sigma^4).
double general_variance_unequal_dispersion(double sigma, double beta1,
                                           double beta2);

// Exact Gaussian-model scan variance for arbitrary (beta1, beta2, sigma_s);
// reduces to the two closed forms above in their limits. Seeds default delay
// spans and the monochromator quadrature window.
double expected_scan_variance(double sigma, double sigma_s, double beta1,
                              double beta2);

// count delays evenly spaced over [-half_span, +half_span].
std::vector<double> symmetric_delays(double half_span, int count);

}  // namespace dcsim
