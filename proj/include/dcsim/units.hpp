#pragma once

#include "dcsim/errors.hpp"

namespace dcsim {

// Units are fixed across the whole library: angular frequency in rad/fs,
// time in fs, quadratic dispersion in fs^2, wavelength in nm, glass length
// in mm. Interfaces restate them where mixing would be easy.

inline constexpr double kSpeedOfLight = 299.792458;  // nm/fs
inline constexpr double kPi = 3.14159265358979323846;

// FWHM of a Gaussian with rms width w is kFwhmPerRms * w.
inline constexpr double kFwhmPerRms = 2.3548200450309493;  // 2*sqrt(2 ln 2)

inline double angular_frequency(double wavelength_nm) {
  return 2.0 * kPi * kSpeedOfLight / wavelength_nm;
}

// rms width of the field spectrum, in rad/fs, from a FWHM bandwidth given in
// wavelength. Small-bandwidth conversion: sigma = 2*pi*c*fwhm/(lambda^2 * 2sqrt(2 ln 2)).
double sigma_from_fwhm_wavelength(double fwhm_nm, double center_wavelength_nm);

inline double fwhm_from_rms(double rms) { return kFwhmPerRms * rms; }

}  // namespace dcsim
