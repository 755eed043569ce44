#include "dcsim/units.hpp"

#include <string>

namespace dcsim {

double sigma_from_fwhm_wavelength(double fwhm_nm, double center_wavelength_nm) {
  if (!(fwhm_nm > 0.0) || !(center_wavelength_nm > 0.0)) {
    throw InvalidParameter("bandwidth conversion needs positive inputs");
  }
  if (fwhm_nm >= center_wavelength_nm) {
    throw InvalidParameter(
        "bandwidth conversion is a small-bandwidth approximation; fwhm " +
        std::to_string(fwhm_nm) + " nm is not small against " +
        std::to_string(center_wavelength_nm) + " nm");
  }
  return 2.0 * kPi * kSpeedOfLight * fwhm_nm /
         (center_wavelength_nm * center_wavelength_nm * kFwhmPerRms);
}

}  // namespace dcsim
