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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qverify {

/// Single-qubit Pauli axis. Qubit 0 is the least significant
/// amplitude-index bit everywhere in this library, and serialized words
/// list qubit 0 first.
enum class Axis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_to_char(Axis a);
Axis axis_from_char(char c);

/// The 2x2 matrix of a single Pauli axis.
Eigen::Matrix2cd pauli_matrix(Axis a);

/// A real-weighted Pauli word on a fixed-size register: axes[q] is the
/// operator acting on qubit q.
struct PauliString {
  std::vector<Axis> axes;
  double coeff = 0.0;

  std::size_t size() const { return axes.size(); }

  /// Number of non-identity positions.
  int weight() const;

  bool is_identity() const { return weight() == 0; }

  /// Word text with qubit 0 leftmost, e.g. "IZZX".
  std::string word() const;

  /// Report form, e.g. "-0.25 * IZZI".
  std::string to_text() const;
};

/// Expands a Hermitian operator acting on up to 3 qubits into weighted
/// Pauli words over an m-qubit register. The matrix indexes its basis with
/// support[0] as the least significant bit. Coefficients are obtained as
/// normalized trace inner products; words with |coeff| < 1e-12 are dropped
/// and the returned words act as identity outside the support.
///
/// Throws std::invalid_argument for non-Hermitian input (checked to
/// 1e-10), repeated or out-of-range support indices, or support > 3.
std::vector<PauliString> decompose_operator(const Eigen::MatrixXcd& op,
                                            const std::vector<int>& support,
                                            int register_size);

/// Dense matrix of a Pauli word restricted to the listed qubits
/// (restrict_to[0] least significant; at most 4 qubits). Every
/// non-identity position of `s` must be covered by restrict_to.
Eigen::MatrixXcd string_to_matrix(const PauliString& s,
                                  const std::vector<int>& restrict_to);

}  // namespace qverify
