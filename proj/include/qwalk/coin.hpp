// Copyright 2026 The qwalk Authors
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

#include <array>
#include <complex>

namespace qwalk {

using Complex = std::complex<double>;

/// Coin basis states. L shifts the walker to x-1, R to x+1.
enum class Coin : int { L = 0, R = 1 };

/// Two coin amplitudes at one lattice site, (alpha, beta) = (<L|psi>, <R|psi>).
struct CoinPair {
  Complex left{};
  Complex right{};

  friend bool operator==(const CoinPair&, const CoinPair&) = default;
};

/// 2x2 complex coin operator, row-major: entry(out, in).
class CoinMatrix {
 public:
  constexpr CoinMatrix(Complex a00, Complex a01, Complex a10, Complex a11)
      : m_{a00, a01, a10, a11} {}

  Complex operator()(int row, int col) const { return m_[2 * row + col]; }

  CoinPair apply(const CoinPair& in) const {
    return {m_[0] * in.left + m_[1] * in.right,
            m_[2] * in.left + m_[3] * in.right};
  }

  CoinMatrix operator*(const CoinMatrix& o) const;
  CoinMatrix adjoint() const;

  /// Max |M^dagger M - I| entry.
  double unitarity_defect() const;

  friend bool operator==(const CoinMatrix&, const CoinMatrix&) = default;

 private:
  std::array<Complex, 4> m_;
};

/// The balanced Hadamard coin (1/sqrt2)[[1,1],[1,-1]].
CoinMatrix hadamard_coin();

/// diag(e^{i phi_left}, e^{i phi_right}) * H. Throws std::invalid_argument on
/// non-finite phases.
CoinMatrix phased_coin(double phi_left, double phi_right);

}  // namespace qwalk
