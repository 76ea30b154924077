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

#include "qwalk/coin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk {

CoinMatrix CoinMatrix::operator*(const CoinMatrix& o) const {
  const auto& a = m_;
  return {a[0] * o(0, 0) + a[1] * o(1, 0), a[0] * o(0, 1) + a[1] * o(1, 1),
          a[2] * o(0, 0) + a[3] * o(1, 0), a[2] * o(0, 1) + a[3] * o(1, 1)};
}

CoinMatrix CoinMatrix::adjoint() const {
  return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
          std::conj(m_[3])};
}

double CoinMatrix::unitarity_defect() const {
  const CoinMatrix p = adjoint() * (*this);
  double worst = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const Complex target = (r == c) ? Complex{1.0, 0.0} : Complex{};
      worst = std::max(worst, std::abs(p(r, c) - target));
    }
  }
  return worst;
}

CoinMatrix hadamard_coin() {
  constexpr double h = 1.0 / std::numbers::sqrt2;
  return {h, h, h, -h};
}

CoinMatrix phased_coin(double phi_left, double phi_right) {
  if (!std::isfinite(phi_left) || !std::isfinite(phi_right)) {
    throw std::invalid_argument("phased_coin: phases must be finite");
  }
  constexpr double h = 1.0 / std::numbers::sqrt2;
  const Complex el = std::polar(1.0, phi_left);
  const Complex er = std::polar(1.0, phi_right);
  return {el * h, el * h, er * h, -(er * h)};
}

}  // namespace qwalk
