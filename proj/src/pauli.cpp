// Copyright 2026 The qverify Authors
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

#include "qverify/pauli.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qverify/errors.hpp"

namespace qverify {

namespace {

constexpr double kCoeffTruncation = 1e-12;
constexpr double kHermiticityTol = 1e-10;

const std::complex<double> kI(0.0, 1.0);

}  // namespace

char axis_to_char(Axis a) {
  switch (a) {
    case Axis::I: return 'I';
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  throw std::invalid_argument("unknown Pauli axis");
}

Axis axis_from_char(char c) {
  switch (c) {
    case 'I': return Axis::I;
    case 'X': return Axis::X;
    case 'Y': return Axis::Y;
    case 'Z': return Axis::Z;
    default: break;
  }
  throw std::invalid_argument(std::string("unknown Pauli axis character '") +
                              c + "'");
}

Eigen::Matrix2cd pauli_matrix(Axis a) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (a) {
    case Axis::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case Axis::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Axis::Y:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case Axis::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

int PauliString::weight() const {
  int w = 0;
  for (Axis a : axes) {
    if (a != Axis::I) ++w;
  }
  return w;
}

std::string PauliString::word() const {
  std::string s;
  s.reserve(axes.size());
  for (Axis a : axes) s.push_back(axis_to_char(a));
  return s;
}

std::string PauliString::to_text() const {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", coeff);
  return std::string(buf) + " * " + word();
}

namespace {

// Entry P[r][c] of a single Pauli factor without building the matrix.
std::complex<double> pauli_entry(Axis a, int r, int c) {
  switch (a) {
    case Axis::I: return r == c ? 1.0 : 0.0;
    case Axis::X: return r != c ? 1.0 : 0.0;
    case Axis::Y:
      if (r == c) return 0.0;
      return r == 1 ? kI : -kI;
    case Axis::Z:
      if (r != c) return 0.0;
      return r == 0 ? 1.0 : -1.0;
  }
  return 0.0;
}

// Entry of the k-qubit word ⊗axes, with axes[0] on the least significant bit.
std::complex<double> word_entry(const std::vector<Axis>& axes, int r, int c) {
  std::complex<double> v = 1.0;
  for (std::size_t j = 0; j < axes.size(); ++j) {
    v *= pauli_entry(axes[j], (r >> j) & 1, (c >> j) & 1);
    if (v == 0.0) return v;
  }
  return v;
}

void check_support(const std::vector<int>& support, int register_size,
                   std::size_t max_size, const char* what) {
  if (support.empty() || support.size() > max_size) {
    throw std::invalid_argument(std::string(what) + ": support must list 1.." +
                                std::to_string(max_size) + " qubits");
  }
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] < 0 || support[i] >= register_size) {
      throw std::invalid_argument(std::string(what) +
                                  ": support index out of range");
    }
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      if (support[i] == support[j]) {
        throw std::invalid_argument(std::string(what) +
                                    ": repeated support index");
      }
    }
  }
}

}  // namespace

std::vector<PauliString> decompose_operator(const Eigen::MatrixXcd& op,
                                            const std::vector<int>& support,
                                            int register_size) {
  check_support(support, register_size, 3, "decompose_operator");
  const int k = static_cast<int>(support.size());
  const int dim = 1 << k;
  if (op.rows() != dim || op.cols() != dim) {
    throw std::invalid_argument(
        "decompose_operator: matrix dimension does not match support size");
  }
  const double herm = (op - op.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermiticityTol) {
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "decompose_operator: input not Hermitian (max |M - M^+| = "
                  "%.3e)",
                  herm);
    throw std::invalid_argument(buf);
  }
  // Symmetrize so the trace coefficients are real to machine precision.
  const Eigen::MatrixXcd herm_op = 0.5 * (op + op.adjoint());

  std::vector<PauliString> out;
  std::vector<Axis> local(static_cast<std::size_t>(k), Axis::I);
  for (int code = 0; code < (1 << (2 * k)); ++code) {
    for (int j = 0; j < k; ++j) {
      local[static_cast<std::size_t>(j)] =
          static_cast<Axis>((code >> (2 * j)) & 3);
    }
    // Tr(S M) / 2^k; S is Hermitian so no adjoint is needed.
    std::complex<double> tr = 0.0;
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        const std::complex<double> s = word_entry(local, r, c);
        if (s != 0.0) tr += s * herm_op(c, r);
      }
    }
    tr /= static_cast<double>(dim);
    if (std::abs(tr.imag()) > kCoeffTruncation) {
      throw IntegrityError(
          "decompose_operator: non-real coefficient from Hermitian input");
    }
    const double coeff = tr.real();
    if (std::abs(coeff) < kCoeffTruncation) continue;

    PauliString s;
    s.axes.assign(static_cast<std::size_t>(register_size), Axis::I);
    for (int j = 0; j < k; ++j) {
      s.axes[static_cast<std::size_t>(support[static_cast<std::size_t>(j)])] =
          local[static_cast<std::size_t>(j)];
    }
    s.coeff = coeff;
    out.push_back(std::move(s));
  }
  return out;
}

Eigen::MatrixXcd string_to_matrix(const PauliString& s,
                                  const std::vector<int>& restrict_to) {
  check_support(restrict_to, static_cast<int>(s.size()), 4,
                "string_to_matrix");
  for (std::size_t q = 0; q < s.axes.size(); ++q) {
    if (s.axes[q] == Axis::I) continue;
    bool covered = false;
    for (int r : restrict_to) {
      if (static_cast<std::size_t>(r) == q) covered = true;
    }
    if (!covered) {
      throw std::invalid_argument(
          "string_to_matrix: non-identity axis outside restrict_to");
    }
  }
  const int k = static_cast<int>(restrict_to.size());
  const int dim = 1 << k;
  std::vector<Axis> local(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    local[static_cast<std::size_t>(j)] =
        s.axes[static_cast<std::size_t>(restrict_to[static_cast<std::size_t>(j)])];
  }
  Eigen::MatrixXcd m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      m(r, c) = s.coeff * word_entry(local, r, c);
    }
  }
  return m;
}

}  // namespace qverify
