#include "dcsim/sellmeier.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "dcsim/units.hpp"

namespace dcsim {

SellmeierMedium bk7_medium(double length_mm) {
  if (length_mm < 0.0) throw InvalidParameter("negative path length");
  SellmeierMedium m;
  m.b = {1.03961212, 0.231792344, 1.01046945};
  m.c_um2 = {0.00600069867, 0.0200179144, 103.560653};
  m.length_mm = length_mm;
  m.lambda_min_um = 0.3;
  m.lambda_max_um = 2.5;
  return m;
}

SellmeierMedium load_sellmeier_medium(const std::string& path,
                                      double length_mm) {
  if (length_mm < 0.0) throw InvalidParameter("negative path length");
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open Sellmeier file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    SellmeierMedium m;
    if (!(row >> m.b[0] >> m.b[1] >> m.b[2] >> m.c_um2[0] >> m.c_um2[1] >>
          m.c_um2[2] >> m.lambda_min_um >> m.lambda_max_um)) {
      throw InvalidParameter("malformed Sellmeier row in " + path);
    }
    m.length_mm = length_mm;
    return m;
  }
  throw InvalidParameter("no coefficient row in " + path);
}

namespace {

void check_band(const SellmeierMedium& m, double wavelength_nm) {
  const double um = wavelength_nm * 1e-3;
  if (um < m.lambda_min_um || um > m.lambda_max_um) {
    throw DomainError("wavelength " + std::to_string(wavelength_nm) +
                      " nm outside the Sellmeier validity band");
  }
}

// n^2 and its first two wavelength derivatives (lambda in um).
struct IndexDerivatives {
  double n;
  double d2n;  // d^2 n / d lambda^2, per um^2
};

IndexDerivatives index_derivatives(const SellmeierMedium& m, double um) {
  const double l2 = um * um;
  double y = 1.0;
  double y1 = 0.0;  // dy/dlambda
  double y2 = 0.0;  // d2y/dlambda2
  for (int i = 0; i < 3; ++i) {
    const double b = m.b[i];
    const double c = m.c_um2[i];
    const double d = l2 - c;
    y += b * l2 / d;
    y1 += -2.0 * b * c * um / (d * d);
    y2 += 2.0 * b * c * (3.0 * l2 + c) / (d * d * d);
  }
  const double n = std::sqrt(y);
  // n = sqrt(y): n'' = y''/(2n) - (y')^2/(4 y^{3/2})
  const double d2n = y2 / (2.0 * n) - y1 * y1 / (4.0 * y * n);
  return {n, d2n};
}

}  // namespace

double refractive_index(const SellmeierMedium& medium, double wavelength_nm) {
  check_band(medium, wavelength_nm);
  return index_derivatives(medium, wavelength_nm * 1e-3).n;
}

double gvd_fs2_per_mm(const SellmeierMedium& medium, double wavelength_nm) {
  check_band(medium, wavelength_nm);
  const auto d = index_derivatives(medium, wavelength_nm * 1e-3);
  // d^2k/domega^2 = lambda^3/(2 pi c^2) * d^2n/dlambda^2, evaluated in nm/fs
  // units and converted to a per-mm path.
  const double d2n_per_nm2 = d.d2n * 1e-6;
  const double per_nm = wavelength_nm * wavelength_nm * wavelength_nm *
                        d2n_per_nm2 /
                        (2.0 * kPi * kSpeedOfLight * kSpeedOfLight);
  return per_nm * 1e6;
}

double gvd_fs2_per_mm_central_diff(const SellmeierMedium& medium,
                                   double wavelength_nm, double step_nm) {
  check_band(medium, wavelength_nm);
  // Differentiate k(omega) = n(omega) omega / c twice in omega directly.
  const double w0 = angular_frequency(wavelength_nm);
  const double dw = angular_frequency(wavelength_nm) -
                    angular_frequency(wavelength_nm + step_nm);
  auto k_of = [&](double w) {
    const double lambda = 2.0 * kPi * kSpeedOfLight / w;
    return refractive_index(medium, lambda) * w / kSpeedOfLight;
  };
  const double per_nm_path =
      (k_of(w0 + dw) - 2.0 * k_of(w0) + k_of(w0 - dw)) / (dw * dw);
  return per_nm_path * 1e6;
}

double quadratic_dispersion_coefficient(const SellmeierMedium& medium,
                                        double wavelength_nm) {
  return 0.5 * gvd_fs2_per_mm(medium, wavelength_nm) * medium.length_mm;
}

double bk7_beta(double length_mm, double wavelength_nm) {
  return quadratic_dispersion_coefficient(bk7_medium(length_mm),
                                          wavelength_nm);
}

}  // namespace dcsim
