// Copyright 2026 The pspc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "pspc/summation.hpp"

namespace pspc::detail {

namespace {

// The FFTW planner is not re-entrant; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Plan {
 public:
  explicit Plan(fftw_plan p) : plan_(p) {}
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

std::vector<std::complex<double>> fft(std::span<const std::complex<double>> in, FftDirection dir) {
  const int n = static_cast<int>(in.size());
  std::vector<std::complex<double>> buf(in.begin(), in.end());
  std::vector<std::complex<double>> out(in.size());
  if (in.empty()) return out;
  fftw_plan raw;
  {
    std::lock_guard lock(planner_mutex());
    raw = fftw_plan_dft_1d(n, as_fftw(buf.data()), as_fftw(out.data()),
                           dir == FftDirection::kForward ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  Plan plan(raw);
  plan.execute();
  return out;
}

std::vector<std::complex<double>> fft_real(std::span<const double> in) {
  const std::size_t n = in.size();
  std::vector<double> buf(in.begin(), in.end());
  std::vector<std::complex<double>> out(n);
  if (n == 0) return out;
  fftw_plan raw;
  {
    std::lock_guard lock(planner_mutex());
    raw = fftw_plan_dft_r2c_1d(static_cast<int>(n), buf.data(), as_fftw(out.data()), FFTW_ESTIMATE);
  }
  Plan plan(raw);
  plan.execute();
  for (std::size_t k = n / 2 + 1; k < n; ++k) out[k] = std::conj(out[n - k]);
  out[0] = {out[0].real(), 0.0};
  if (n % 2 == 0) out[n / 2] = {out[n / 2].real(), 0.0};
  return out;
}

std::vector<double> ifft_to_real(std::span<const std::complex<double>> in) {
  const std::size_t n = in.size();
  std::vector<std::complex<double>> half(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(n / 2 + 1));
  std::vector<double> out(n);
  if (n == 0) return out;
  fftw_plan raw;
  {
    std::lock_guard lock(planner_mutex());
    raw = fftw_plan_dft_c2r_1d(static_cast<int>(n), as_fftw(half.data()), out.data(), FFTW_ESTIMATE);
  }
  Plan plan(raw);
  plan.execute();
  return out;
}

std::vector<std::complex<double>> unit_roots(std::size_t n) {
  std::vector<std::complex<double>> w(n);
  for (std::size_t r = 0; r < n; ++r) {
    // Symmetric reduction keeps the angle in [-pi, pi].
    const double t = (2 * r < n) ? static_cast<double>(r) / static_cast<double>(n)
                                 : -static_cast<double>(n - r) / static_cast<double>(n);
    const double ang = -2.0 * std::numbers::pi * t;
    w[r] = {std::cos(ang), std::sin(ang)};
  }
  return w;
}

std::vector<std::complex<double>> dft_direct(std::span<const std::complex<double>> in, FftDirection dir) {
  const std::size_t n = in.size();
  const auto w = unit_roots(n);
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    ComplexCompensatedSum acc;
    std::size_t r = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const auto root = dir == FftDirection::kForward ? w[r] : std::conj(w[r]);
      acc.add(in[j] * root);
      r += k;
      if (r >= n) r -= n;
    }
    out[k] = acc.value();
  }
  return out;
}

}  // namespace pspc::detail
