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

#include "mcxqft/phase.hpp"

#include <numbers>
#include <stdexcept>

namespace mcxqft {

PhaseExponent PhaseExponent::normalize(int64_t k, int m) {
  if (m < 0 || m > kMaxExponent) {
    throw std::out_of_range("phase exponent denominator out of range");
  }
  const int64_t mod = int64_t{1} << m;
  k %= mod;
  if (k < 0) k += mod;
  if (k == 0) return PhaseExponent(0, 0);
  while (m > 0 && (k & 1) == 0) {
    k >>= 1;
    --m;
  }
  return PhaseExponent(k, m);
}

int64_t PhaseExponent::signed_k() const {
  if (m_ == 0) return 0;
  const int64_t half = int64_t{1} << (m_ - 1);
  return k_ > half ? k_ - (int64_t{1} << m_) : k_;
}

double PhaseExponent::radians() const {
  return 2.0 * std::numbers::pi * static_cast<double>(k_) /
         static_cast<double>(int64_t{1} << m_);
}

std::string PhaseExponent::pi_string() const {
  if (k_ == 0) return "0";
  if (m_ == 1) return "pi";
  const std::string den = std::to_string(int64_t{1} << (m_ - 1));
  if (k_ == 1) return "pi/" + den;
  return std::to_string(k_) + "*pi/" + den;
}

PhaseExponent PhaseExponent::operator+(const PhaseExponent& o) const {
  const int m = m_ > o.m_ ? m_ : o.m_;
  return normalize((k_ << (m - m_)) + (o.k_ << (m - o.m_)), m);
}

PhaseExponent PhaseExponent::operator-(const PhaseExponent& o) const {
  return *this + (-o);
}

PhaseExponent PhaseExponent::operator-() const { return normalize(-k_, m_); }

}  // namespace mcxqft
