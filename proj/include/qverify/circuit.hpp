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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qverify {

enum class GateKind { X, Z, H, S, TPhase, CNOT, CZ, Custom };

std::string_view gate_kind_name(GateKind k);

/// One circuit step: a unitary on one or two qubits. targets[0] indexes
/// the least significant bit of the gate matrix, so for CNOT the control
/// is targets[0] and the target is targets[1].
struct Gate {
  GateKind kind = GateKind::Custom;
  std::vector<int> targets;
  Eigen::MatrixXcd matrix;

  static Gate x(int t);
  static Gate z(int t);
  static Gate h(int t);
  static Gate s(int t);
  static Gate t_phase(int t);
  static Gate cnot(int control, int target);
  static Gate cz(int a, int b);
  static Gate custom(Eigen::MatrixXcd matrix, std::vector<int> targets);

  int arity() const { return static_cast<int>(targets.size()); }
};

/// Throws std::invalid_argument unless the gate has 1-2 distinct in-range
/// targets and a matching unitary matrix (checked to 1e-10).
void validate_gate(const Gate& g, int n);

/// An ordered gate list U_1..U_T on n work qubits; the implicit step
/// U_0 is the identity. The designated output qubit is index 0.
struct QuantumCircuit {
  int n = 0;
  std::vector<Gate> gates;
  std::string label;

  int step_count() const { return static_cast<int>(gates.size()); }
};

void validate_circuit(const QuantumCircuit& c);

enum class Membership { Yes, No, PromiseViolating };

std::string_view membership_name(Membership m);

/// A decision-problem instance: a circuit plus its claimed membership and
/// error exponent. Yes instances satisfy p_acc >= 1 - 2^-r_bound and no
/// instances p_acc <= 2^-r_bound (r_bound may be +infinity for circuits
/// whose acceptance probability is exactly 0 or 1). twin_name, when set,
/// names the opposite-membership catalog instance used to calibrate the
/// thresholds that this instance cannot witness itself.
struct Instance {
  QuantumCircuit circuit;
  Membership membership = Membership::PromiseViolating;
  double r_bound = 0.0;
  std::optional<std::string> twin_name;

  const std::string& name() const { return circuit.label; }
};

/// Circuit for the complemented decision: identical steps except that the
/// final gate additionally flips the output qubit, i.e. U'_T = X_0 * U_T
/// embedded on the union of U_T's support and qubit 0. Keeps T unchanged.
/// Throws std::invalid_argument if that union would exceed two qubits.
QuantumCircuit complement_circuit(const QuantumCircuit& c);

/// Probability that the output qubit (index 0) reads 0 after running the
/// circuit on |0^n>.
double acceptance_probability(const QuantumCircuit& c);

/// Fixed catalog of desk-scale instances (const0, const1, entangle0,
/// entangle1, coin, bell).
const std::vector<Instance>& builtin_instances();

/// Catalog lookup by label; nullptr when absent.
const Instance* find_instance(std::string_view name);

/// Circuit text format: first line "qubits <n>", then one gate per line,
/// lowercase mnemonic followed by targets ("h 0", "cnot 0 1"); custom
/// gates list 8 or 32 re/im pairs after the targets. '#' starts a comment.
QuantumCircuit parse_circuit_text(std::istream& in, std::string label);
QuantumCircuit load_circuit_file(const std::string& path);
std::string circuit_to_text(const QuantumCircuit& c);

}  // namespace qverify
