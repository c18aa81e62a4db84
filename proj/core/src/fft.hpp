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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pspc::detail {

enum class FftDirection {
  kForward,   // sum x[n] e(-k n / N)
  kBackward,  // sum x[n] e(+k n / N), unnormalized
};

// Arbitrary-length transform; FFTW estimate-mode plans, so output is
// independent of machine load or wisdom state.
std::vector<std::complex<double>> fft(std::span<const std::complex<double>> in, FftDirection dir);

// Forward transform of real input, returned at full length with the upper
// half filled by exact conjugation of the lower half.
std::vector<std::complex<double>> fft_real(std::span<const double> in);

// Backward transform of a Hermitian spectrum, real part only, unnormalized.
std::vector<double> ifft_to_real(std::span<const std::complex<double>> in);

// e(-r / n) for r = 0..n-1.
std::vector<std::complex<double>> unit_roots(std::size_t n);

// O(n^2) transform with exact integer phase reduction and compensated sums.
std::vector<std::complex<double>> dft_direct(std::span<const std::complex<double>> in, FftDirection dir);

}  // namespace pspc::detail
