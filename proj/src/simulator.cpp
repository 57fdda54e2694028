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

#include "mcxqft/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace mcxqft {

namespace {

void check_dims(const Unitary& u, const Unitary& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
}

int env_cap() {
  const char* s = std::getenv("MCX_SIM_MAX_QUBITS");
  if (s == nullptr || *s == '\0') return -1;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1 || v > 30) return -1;
  return static_cast<int>(v);
}

}  // namespace

Unitary::Unitary(int n)
    : n_(n), dim_(std::size_t{1} << n), data_(dim_ * dim_, Complex{0.0, 0.0}) {}

Unitary Unitary::identity(int n) {
  Unitary u(n);
  for (std::size_t i = 0; i < u.dim_; ++i) u(i, i) = 1.0;
  return u;
}

Unitary Unitary::operator*(const Unitary& o) const {
  check_dims(*this, o);
  Unitary r(n_);
  for (std::size_t c = 0; c < dim_; ++c) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex b = o(k, c);
      if (b == Complex{}) continue;
      const Complex* a = column(k);
      Complex* out = r.column(c);
      for (std::size_t i = 0; i < dim_; ++i) out[i] += a[i] * b;
    }
  }
  return r;
}

Unitary Unitary::adjoint() const {
  Unitary r(n_);
  for (std::size_t c = 0; c < dim_; ++c) {
    for (std::size_t i = 0; i < dim_; ++i) r(c, i) = std::conj((*this)(i, c));
  }
  return r;
}

double Unitary::unitarity_error() const {
  const Unitary p = adjoint() * (*this);
  double e = 0.0;
  for (std::size_t c = 0; c < dim_; ++c) {
    for (std::size_t i = 0; i < dim_; ++i) {
      e = std::max(e, std::abs(p(i, c) - (i == c ? 1.0 : 0.0)));
    }
  }
  return e;
}

StateVector StateVector::basis(int n, uint64_t index) {
  StateVector s;
  s.n_ = n;
  s.amp_.assign(std::size_t{1} << n, Complex{});
  s.amp_.at(index) = 1.0;
  return s;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

int unitary_qubit_cap() {
  const int e = env_cap();
  return e > 0 ? e : 12;
}

int statevector_qubit_cap() { return std::max(20, unitary_qubit_cap()); }

void apply_gate(Complex* amp, int n, const Gate& g) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t m0 = std::size_t{1} << g.q[0];
  const std::size_t m1 = g.arity() == 2 ? std::size_t{1} << g.q[1] : 0;
  switch (g.kind) {
    case GateKind::H: {
      const double s = std::numbers::sqrt2 / 2.0;
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & m0) continue;
        const Complex a = amp[i], b = amp[i | m0];
        amp[i] = s * (a + b);
        amp[i | m0] = s * (a - b);
      }
      break;
    }
    case GateKind::X:
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & m0)) std::swap(amp[i], amp[i | m0]);
      }
      break;
    case GateKind::SX: {
      const Complex p{0.5, 0.5}, q{0.5, -0.5};
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & m0) continue;
        const Complex a = amp[i], b = amp[i | m0];
        amp[i] = p * a + q * b;
        amp[i | m0] = q * a + p * b;
      }
      break;
    }
    case GateKind::Rz: {
      const double t = g.phase.radians() / 2.0;
      const Complex lo = std::polar(1.0, -t), hi = std::polar(1.0, t);
      for (std::size_t i = 0; i < dim; ++i) amp[i] *= (i & m0) ? hi : lo;
      break;
    }
    case GateKind::Phase: {
      const Complex f = std::polar(1.0, g.phase.radians());
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & m0) amp[i] *= f;
      }
      break;
    }
    case GateKind::CPhase: {
      const Complex f = std::polar(1.0, g.phase.radians());
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & m0) && (i & m1)) amp[i] *= f;
      }
      break;
    }
    case GateKind::CX:
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & m0) && !(i & m1)) std::swap(amp[i], amp[i | m1]);
      }
      break;
    case GateKind::Swap:
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & m0) && !(i & m1)) std::swap(amp[i], amp[(i ^ m0) | m1]);
      }
      break;
  }
}

Unitary unitary_of(const Circuit& c) {
  if (c.n_qubits > unitary_qubit_cap()) {
    throw std::length_error("unitary_of: " + std::to_string(c.n_qubits) +
                            " qubits exceeds the cap of " +
                            std::to_string(unitary_qubit_cap()));
  }
  c.validate();
  Unitary u = Unitary::identity(c.n_qubits);
  const Complex gp = std::polar(1.0, c.global_phase.radians());
  for (std::size_t col = 0; col < u.dim(); ++col) {
    Complex* amp = u.column(col);
    for (const Gate& g : c.gates) apply_gate(amp, c.n_qubits, g);
    for (std::size_t i = 0; i < u.dim(); ++i) amp[i] *= gp;
  }
  return u;
}

StateVector simulate(const Circuit& c, StateVector psi) {
  if (c.n_qubits > statevector_qubit_cap()) {
    throw std::length_error("simulate: too many qubits");
  }
  if (psi.n_qubits() != c.n_qubits) throw std::invalid_argument("size mismatch");
  Complex* amp = psi.amplitudes().data();
  for (const Gate& g : c.gates) apply_gate(amp, c.n_qubits, g);
  const Complex gp = std::polar(1.0, c.global_phase.radians());
  for (Complex& a : psi.amplitudes()) a *= gp;
  return psi;
}

Unitary shift_permutation(int n, int sign) {
  if (n < 1) throw std::invalid_argument("shift_permutation: n < 1");
  Unitary u(n);
  const std::size_t dim = u.dim();
  for (std::size_t a = 0; a < dim; ++a) {
    const std::size_t b = sign >= 0 ? (a + 1) % dim : (a + dim - 1) % dim;
    u(b, a) = 1.0;
  }
  return u;
}

Unitary mcx_permutation(int n, TargetPosition target) {
  if (n < 2) throw std::invalid_argument("mcx_permutation: n < 2");
  Unitary u(n);
  const std::size_t dim = u.dim();
  const std::size_t tbit =
      target == TargetPosition::Most ? std::size_t{1} << (n - 1) : 1;
  const std::size_t controls = (dim - 1) & ~tbit;
  for (std::size_t a = 0; a < dim; ++a) {
    const std::size_t b = (a & controls) == controls ? a ^ tbit : a;
    u(b, a) = 1.0;
  }
  return u;
}

Unitary permute_wires(const Unitary& u, const std::vector<int>& perm) {
  const int n = u.n_qubits();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permute_wires: size mismatch");
  }
  Unitary r(n);
  for (std::size_t a = 0; a < u.dim(); ++a) {
    std::size_t b = 0;
    for (int l = 0; l < n; ++l) {
      if ((a >> l) & 1) b |= std::size_t{1} << perm[l];
    }
    for (std::size_t c = 0; c < u.dim(); ++c) r(b, c) = u(a, c);
  }
  return r;
}

Equivalence equiv_global_phase(const Unitary& u, const Unitary& v, double tol) {
  check_dims(u, v);
  std::size_t br = 0, bc = 0;
  double best = -1.0;
  for (std::size_t c = 0; c < v.dim(); ++c) {
    for (std::size_t r = 0; r < v.dim(); ++r) {
      const double m = std::abs(v(r, c));
      if (m > best) {
        best = m;
        br = r;
        bc = c;
      }
    }
  }
  Equivalence e;
  e.phase = std::arg(u(br, bc) * std::conj(v(br, bc)));
  const Complex f = std::polar(1.0, e.phase);
  for (std::size_t c = 0; c < v.dim(); ++c) {
    for (std::size_t r = 0; r < v.dim(); ++r) {
      e.max_error = std::max(e.max_error, std::abs(u(r, c) - f * v(r, c)));
    }
  }
  e.equivalent = e.max_error <= tol;
  return e;
}

double operator_distance(const Unitary& u, const Unitary& v) {
  check_dims(u, v);
  using Mat = Eigen::MatrixXcd;
  const auto d = static_cast<Eigen::Index>(u.dim());
  const Eigen::Map<const Mat> mu(u.column(0), d, d), mv(v.column(0), d, d);
  // |U - e^{it} V| = |W - e^{it}| with W = U V^dagger unitary, so only the
  // spread of W's eigenphases matters.
  const Mat w = mu * mv.adjoint();
  const Eigen::ComplexEigenSolver<Mat> es(w, false);
  std::vector<double> ph;
  for (Eigen::Index i = 0; i < d; ++i) ph.push_back(std::arg(es.eigenvalues()[i]));
  std::sort(ph.begin(), ph.end());
  double gap = ph.front() + 2 * std::numbers::pi - ph.back();
  for (std::size_t i = 1; i < ph.size(); ++i) gap = std::max(gap, ph[i] - ph[i - 1]);
  const double arc = 2 * std::numbers::pi - gap;
  return 2 * std::sin(arc / 4);
}

std::string unitary_to_csv(const Unitary& u) {
  std::ostringstream out;
  out.precision(17);
  out << "row,col,re,im\n";
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < u.dim(); ++c) {
      const Complex z = u(r, c);
      if (std::abs(z) > 1e-12) {
        out << r << "," << c << "," << z.real() << "," << z.imag() << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace mcxqft
