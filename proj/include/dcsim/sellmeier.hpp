#pragma once

#include <array>
#include <string>

#include "dcsim/errors.hpp"

namespace dcsim {

// Three-term Sellmeier medium: n^2(lambda) = 1 + sum B_i lambda^2/(lambda^2 - C_i)
// with lambda in micrometers, plus a physical path length.
struct SellmeierMedium {
  std::array<double, 3> b{};      // dimensionless
  std::array<double, 3> c_um2{};  // um^2
  double length_mm = 0.0;
  double lambda_min_um = 0.0;  // validity band
  double lambda_max_um = 0.0;
};

// Standard BK7 coefficient set; mirrored in data/bk7_sellmeier.txt.
SellmeierMedium bk7_medium(double length_mm);

// Reads one coefficient row: B1 B2 B3 C1 C2 C3 lambda_min_um lambda_max_um.
// Lines starting with '#' are comments.
SellmeierMedium load_sellmeier_medium(const std::string& path,
                                      double length_mm);

double refractive_index(const SellmeierMedium& medium, double wavelength_nm);

// d^2k/domega^2 per mm of path, from analytic differentiation of the
// Sellmeier form.
double gvd_fs2_per_mm(const SellmeierMedium& medium, double wavelength_nm);

// Central-difference check of the same quantity (validation path).
double gvd_fs2_per_mm_central_diff(const SellmeierMedium& medium,
                                   double wavelength_nm, double step_nm);

// beta = (1/2) d^2k/domega^2 * L for the medium's length.
double quadratic_dispersion_coefficient(const SellmeierMedium& medium,
                                        double wavelength_nm);

// Same for BK7 directly: beta in fs^2 for the given path and wavelength.
double bk7_beta(double length_mm, double wavelength_nm);

}  // namespace dcsim
