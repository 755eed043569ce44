#include "dcsim/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

namespace dcsim::fft {

namespace {

// FFTW plan creation and destruction are not thread safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanHandle {
  fftw_plan plan = nullptr;
  ~PlanHandle() {
    if (plan) {
      std::lock_guard<std::mutex> lock(planner_mutex());
      fftw_destroy_plan(plan);
    }
  }
};

fftw_complex* as_fftw(cd* p) { return reinterpret_cast<fftw_complex*>(p); }

// (-1)^j mask converts between index-centered and origin-based transforms.
void apply_alternating_mask(std::vector<cd>& data) {
  for (std::size_t j = 1; j < data.size(); j += 2) data[j] = -data[j];
}

}  // namespace

void transform(std::vector<cd>& data, int sign) {
  const int n = static_cast<int>(data.size());
  if (n == 0) return;
  PlanHandle handle;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    handle.plan = fftw_plan_dft_1d(n, as_fftw(data.data()),
                                   as_fftw(data.data()),
                                   sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  fftw_execute(handle.plan);
}

void centered_transform(std::vector<cd>& data) {
  apply_alternating_mask(data);
  transform(data, -1);
  apply_alternating_mask(data);
}

void centered_transform_2d(std::vector<cd>& data, int n, bool parallel) {
  // Row pass then column pass, each a centered 1D transform. One plan per
  // pass, executed per row with the new-array interface (thread safe).
  PlanHandle row_plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    std::vector<cd> probe(n);
    row_plan.plan = fftw_plan_dft_1d(n, as_fftw(probe.data()),
                                     as_fftw(probe.data()), FFTW_FORWARD,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
  }

  auto run_row = [&](cd* row) {
    for (int j = 1; j < n; j += 2) row[j] = -row[j];
    fftw_execute_dft(row_plan.plan, as_fftw(row), as_fftw(row));
    for (int j = 1; j < n; j += 2) row[j] = -row[j];
  };

#pragma omp parallel for if (parallel) schedule(static)
  for (int r = 0; r < n; ++r) run_row(&data[static_cast<std::size_t>(r) * n]);

#pragma omp parallel for if (parallel) schedule(static)
  for (int c = 0; c < n; ++c) {
    std::vector<cd> column(n);
    for (int r = 0; r < n; ++r) column[r] = data[static_cast<std::size_t>(r) * n + c];
    run_row(column.data());
    for (int r = 0; r < n; ++r) data[static_cast<std::size_t>(r) * n + c] = column[r];
  }
}

std::vector<cd> naive_centered_transform(const std::vector<cd>& data) {
  const int n = static_cast<int>(data.size());
  std::vector<cd> out(n);
  for (int k = 0; k < n; ++k) {
    cd acc{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
      const double phase =
          -2.0 * 3.14159265358979323846 * (j - n / 2) * (k - n / 2) / n;
      acc += data[j] * cd{std::cos(phase), std::sin(phase)};
    }
    out[k] = acc;
  }
  return out;
}

std::vector<cd> naive_centered_transform_2d(const std::vector<cd>& data,
                                            int n) {
  std::vector<cd> out(static_cast<std::size_t>(n) * n);
  for (int k1 = 0; k1 < n; ++k1) {
    for (int k2 = 0; k2 < n; ++k2) {
      cd acc{0.0, 0.0};
      for (int j1 = 0; j1 < n; ++j1) {
        for (int j2 = 0; j2 < n; ++j2) {
          const double phase = -2.0 * 3.14159265358979323846 *
                               ((j1 - n / 2) * (k1 - n / 2) +
                                (j2 - n / 2) * (k2 - n / 2)) /
                               n;
          acc += data[static_cast<std::size_t>(j1) * n + j2] *
                 cd{std::cos(phase), std::sin(phase)};
        }
      }
      out[static_cast<std::size_t>(k1) * n + k2] = acc;
    }
  }
  return out;
}

}  // namespace dcsim::fft
