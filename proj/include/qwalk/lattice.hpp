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

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

namespace qwalk {

/// Raised when a step would move amplitude past the lattice edge. The lattice
/// never wraps or reflects.
class LatticeOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite window [min_site, min_site + size) of the signed integer line.
class Lattice {
 public:
  Lattice() = default;
  Lattice(int min_site, int size) : min_site_(min_site), size_(size) {
    if (size <= 0) throw std::invalid_argument("Lattice: size must be positive");
  }

  /// Smallest lattice on which walkers starting at `starts` can take `steps`
  /// steps with one free site left on each side: 2*steps + 3 sites for a
  /// single start.
  static Lattice for_walk(std::span<const int> starts, int steps) {
    if (starts.empty()) throw std::invalid_argument("Lattice: no start sites");
    if (steps < 0) throw std::invalid_argument("Lattice: negative step count");
    const auto [lo, hi] = std::minmax_element(starts.begin(), starts.end());
    return Lattice(*lo - steps - 1, (*hi - *lo) + 2 * steps + 3);
  }
  static Lattice for_walk(std::initializer_list<int> starts, int steps) {
    return for_walk(std::span<const int>(starts.begin(), starts.size()), steps);
  }

  int min_site() const { return min_site_; }
  int max_site() const { return min_site_ + size_ - 1; }
  int size() const { return size_; }
  int modes() const { return 2 * size_; }

  bool contains(int x) const { return x >= min_site_ && x <= max_site(); }
  bool contains(const Lattice& o) const {
    return o.min_site_ >= min_site_ && o.max_site() <= max_site();
  }

  int position(int index) const { return min_site_ + index; }
  int index(int x) const {
    if (!contains(x)) {
      throw std::out_of_range("Lattice: site " + std::to_string(x) +
                              " outside [" + std::to_string(min_site_) + ", " +
                              std::to_string(max_site()) + "]");
    }
    return x - min_site_;
  }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  int min_site_ = 0;
  int size_ = 1;
};

}  // namespace qwalk
