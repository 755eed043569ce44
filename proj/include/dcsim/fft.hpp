#pragma once

#include <complex>
#include <vector>

namespace dcsim::fft {

using cd = std::complex<double>;

// Plain DFT, kernel sum_j x[j] e^{-2 pi i j k / n} (sign=-1) or its
// unnormalized inverse (sign=+1). n arbitrary.
void transform(std::vector<cd>& data, int sign);

// Centered transform between x_j = (j - n/2) dx and y_k = (k - n/2) dy with
// dy = 2 pi / (n dx), kernel e^{-i x y}. Output carries a constant unimodular
// factor relative to the continuum integral (irrelevant for magnitudes);
// scale by dx/(2 pi) outside to approximate (1/2pi) * integral dx.
void centered_transform(std::vector<cd>& data);

// Same, one centered transform per row and per column of an n x n array
// stored row-major. parallel toggles OpenMP over rows/columns; results are
// bit-identical either way.
void centered_transform_2d(std::vector<cd>& data, int n, bool parallel);

// O(n^2) / O(n^4) references for the transforms above.
std::vector<cd> naive_centered_transform(const std::vector<cd>& data);
std::vector<cd> naive_centered_transform_2d(const std::vector<cd>& data, int n);

}  // namespace dcsim::fft
