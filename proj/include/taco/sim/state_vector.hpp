#pragma once

#include <string_view>
#include <vector>

#include "taco/sim/kernels.hpp"

namespace taco::sim {

// Memory grows as 2^n; soft cap.
inline constexpr unsigned kMaxQubits = 20;

enum class GateKind { RX, RY, RZ, CNOT };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

// One gate acting on a register. `control` is meaningful for CNOT only,
// `angle` for rotations only.
struct GateInstance {
    GateKind kind;
    unsigned wire;
    unsigned control = 0;
    double angle = 0.0;

    static GateInstance rotation(GateKind kind, unsigned wire, double angle);
    static GateInstance cnot(unsigned control, unsigned target);
};

// Full complex amplitude vector of an n-qubit register. Basis index bit 0
// corresponds to wire 0.
struct StateVector {
    unsigned n_qubits = 0;
    std::vector<Complex> amplitudes;
};

// |0...0>: amplitude[0] = 1, rest 0.
StateVector init_state(unsigned n_qubits);

// Applies the gate in place. Norm-preserving (unitary).
void apply_gate(StateVector& state, const GateInstance& gate);

double expectation_z(const StateVector& state, unsigned wire);

double state_norm(const StateVector& state);

// Standard rotation matrices:
//   RX(t) = [[cos t/2, -i sin t/2], [-i sin t/2, cos t/2]]
//   RY(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
//   RZ(t) = diag(e^{-it/2}, e^{it/2})
Mat2 rotation_matrix(GateKind kind, double angle);

} // namespace taco::sim
