#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "taco/sim/state_vector.hpp"
#include "taco/util/rng.hpp"
#include "taco/vqc/structure.hpp"

namespace helpers {

// Random valid gate on an n-qubit register.
inline taco::sim::GateInstance random_gate(taco::rng::SplitMix64& gen,
                                           unsigned n_qubits) {
    using taco::sim::GateInstance;
    using taco::sim::GateKind;
    const auto pick = gen.below(n_qubits >= 2 ? 4 : 3);
    if (pick == 3) {
        const unsigned control = static_cast<unsigned>(gen.below(n_qubits));
        unsigned target = static_cast<unsigned>(gen.below(n_qubits - 1));
        if (target >= control) {
            ++target;
        }
        return GateInstance::cnot(control, target);
    }
    const GateKind kind = pick == 0   ? GateKind::RX
                          : pick == 1 ? GateKind::RY
                                      : GateKind::RZ;
    return GateInstance::rotation(kind, static_cast<unsigned>(gen.below(n_qubits)),
                                  gen.uniform(-3.2, 3.2));
}

// Restores automatic kernel backend selection on scope exit.
struct BackendGuard {
    ~BackendGuard() { taco::sim::force_backend(taco::sim::KernelBackend::Auto); }
};

// Unique scratch directory under the system temp dir, removed on destruction.
struct TempDir {
    std::filesystem::path path;

    explicit TempDir(const std::string& tag) {
        static std::mt19937_64 rng{std::random_device{}()};
        path = std::filesystem::temp_directory_path() /
               (tag + "_" + std::to_string(rng()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

// 1-wire circuit with a single forced-RY layer: forward = cos(feature + theta).
inline taco::vqc::VqcStructure single_ry_circuit() {
    taco::vqc::VqcStructure vqc;
    vqc.n_wires = 1;
    vqc.seed = 0;
    vqc.layers.push_back(taco::vqc::Layer{{taco::sim::GateKind::RY}, {}});
    vqc.measured_wires = {0};
    return vqc;
}

} // namespace helpers
