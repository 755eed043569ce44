#pragma once

#include "dcsim/errors.hpp"
#include "dcsim/shg.hpp"

namespace dcsim {

struct GaussianFit {
  double center = 0.0;     // fs
  double rms_width = 0.0;  // fs
  double fwhm = 0.0;       // 2 sqrt(2 ln 2) * rms_width
  double amplitude = 0.0;
  double baseline = 0.0;
  double residual_rms = 0.0;
  int iterations = 0;
};

// Thrown when the least-squares iteration does not converge; carries the
// moment-based estimate it started from.
class FitFailure : public Error {
 public:
  FitFailure(const std::string& what, GaussianFit estimate)
      : Error(what), estimate(estimate) {}
  GaussianFit estimate;
};

struct FitOptions {
  int max_iterations = 100;
  double relative_tolerance = 1e-6;
};

// Least squares of amplitude*exp(-(tau-center)^2/(2 w^2)) + baseline,
// Gauss-Newton with step damping, initialized from moments.
GaussianFit fit_gaussian_trace(const CorrelationTrace& trace,
                               const FitOptions& options = {});

// Where the measured variance comes from. A coincidence measurement between
// the two arms is the nonlocal setting the time-difference inequality
// addresses; a locally detected SHG signal reproduces the same trace but
// carries no nonlocal claim, so it never counts as a violation.
enum class DetectionKind { nonlocal_coincidence, local_shg };

struct VarianceReport {
  double measured_variance = 0.0;  // fs^2
  double initial_variance = 0.0;   // fs^2, dispersion-free reference
  double beta = 0.0;               // fs^2
  double bound = 0.0;              // fs^2
  double tolerance = 0.0;          // relative
  DetectionKind detection = DetectionKind::nonlocal_coincidence;
  bool violated = false;
};

// initial_variance + (2 beta)^2 / initial_variance, the classical lower bound
// on the dispersed time-difference variance.
double franson_bound(double initial_variance, double beta);

// Default tolerance 2.5%: the separable biphoton at sigma_c = 10 sigma sits
// 1.96% below the bound (the bound is saturated only as sigma_c -> infinity)
// and must not register as a violation.
VarianceReport check_violation(
    double measured_variance, double initial_variance, double beta,
    double tolerance = 0.025,
    DetectionKind detection = DetectionKind::nonlocal_coincidence);

// 1/(sigma*sigma_narrow): dispersion cancellation persists for beta below
// this scale.
double cancellation_persistence_bound(double sigma, double sigma_narrow);

}  // namespace dcsim
