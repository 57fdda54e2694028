// Copyright 2026 The mcxqft Authors
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

#include <cstdint>
#include <string>

namespace mcxqft {

// Exact dyadic angle 2*pi*k / 2^m, kept reduced modulo 2*pi.
class PhaseExponent {
 public:
  static constexpr int kMaxExponent = 60;

  PhaseExponent() = default;

  // Canonical form: 0 <= k < 2^m with k odd, or (0, 0).
  static PhaseExponent normalize(int64_t k, int m);

  // 2*pi / 2^m, the angle of R_m.
  static PhaseExponent rotation(int m) { return normalize(1, m); }

  int64_t k() const { return k_; }
  int m() const { return m_; }
  bool is_zero() const { return k_ == 0; }

  // Representative numerator in (-2^(m-1), 2^(m-1)], same denominator.
  int64_t signed_k() const;

  double radians() const;

  // Angle as an exact multiple of pi, e.g. "pi/4" or "3*pi/8".
  std::string pi_string() const;

  PhaseExponent operator+(const PhaseExponent& o) const;
  PhaseExponent operator-(const PhaseExponent& o) const;
  PhaseExponent operator-() const;
  PhaseExponent& operator+=(const PhaseExponent& o) { return *this = *this + o; }
  bool operator==(const PhaseExponent& o) const = default;

 private:
  PhaseExponent(int64_t k, int m) : k_(k), m_(m) {}
  int64_t k_ = 0;
  int m_ = 0;
};

inline PhaseExponent phase_normalize(int64_t k, int m) {
  return PhaseExponent::normalize(k, m);
}

// Pi as a phase exponent, used for sign bookkeeping.
inline PhaseExponent phase_pi() { return PhaseExponent::normalize(1, 1); }

}  // namespace mcxqft
