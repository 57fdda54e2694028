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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "mcxqft/circuit.hpp"

namespace mcxqft {

using Complex = std::complex<double>;

// Dense 2^n x 2^n matrix stored column-major.
class Unitary {
 public:
  Unitary() = default;
  explicit Unitary(int n);
  static Unitary identity(int n);

  int n_qubits() const { return n_; }
  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[c * dim_ + r]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[c * dim_ + r];
  }
  Complex* column(std::size_t c) { return data_.data() + c * dim_; }
  const Complex* column(std::size_t c) const { return data_.data() + c * dim_; }

  Unitary operator*(const Unitary& o) const;
  Unitary adjoint() const;
  // max |U^dagger U - I|.
  double unitarity_error() const;

 private:
  int n_ = 0;
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

class StateVector {
 public:
  StateVector() = default;
  static StateVector basis(int n, uint64_t index);
  int n_qubits() const { return n_; }
  std::vector<Complex>& amplitudes() { return amp_; }
  const std::vector<Complex>& amplitudes() const { return amp_; }
  double norm() const;

 private:
  int n_ = 0;
  std::vector<Complex> amp_;
};

// Dense matrix cap (default 12); MCX_SIM_MAX_QUBITS overrides it.
int unitary_qubit_cap();
// Single-vector cap (default 20, never below the matrix cap).
int statevector_qubit_cap();

// Applies g in place to the 2^n amplitudes at `amp`.
void apply_gate(Complex* amp, int n, const Gate& g);

// Product of the gates in order times exp(i * global_phase). Throws
// std::length_error above the cap.
Unitary unitary_of(const Circuit& c);
StateVector simulate(const Circuit& c, StateVector psi);

// Basis a -> a + sign mod 2^n.
Unitary shift_permutation(int n, int sign);

enum class TargetPosition { Most, Least };
// Flips the target bit iff every other bit is 1.
Unitary mcx_permutation(int n, TargetPosition target = TargetPosition::Most);

// P * U where P moves bit l of the basis index to bit perm[l].
Unitary permute_wires(const Unitary& u, const std::vector<int>& perm);

struct Equivalence {
  bool equivalent = false;
  double phase = 0.0;      // theta with U ~ exp(i theta) V
  double max_error = 0.0;  // max |U - exp(i theta) V|
};

// theta is read off the largest-magnitude entry of V.
Equivalence equiv_global_phase(const Unitary& u, const Unitary& v,
                               double tol = 1e-9);

// min over theta of the spectral norm of U - exp(i theta) V, for unitary U, V.
// Ranges over [0, 2].
double operator_distance(const Unitary& u, const Unitary& v);

// "row,col,re,im" lines for entries with magnitude above 1e-12.
std::string unitary_to_csv(const Unitary& u);

}  // namespace mcxqft
