#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "taco/sim/state_vector.hpp"

namespace taco::vqc {

// One parameterized layer: a trainable rotation on every wire followed by a
// fixed CNOT entangler ring.
struct Layer {
    std::vector<sim::GateKind> rotations;                    // one per wire
    std::vector<std::pair<unsigned, unsigned>> entanglers;   // (control, target)

    bool operator==(const Layer&) const = default;
};

// Identity of one trainable rotation angle. Indices are 0..P-1 with no gaps,
// layer-major then wire-ascending.
struct ParameterDescriptor {
    std::size_t index;
    unsigned layer;
    unsigned wire;
    sim::GateKind gate_kind;

    bool operator==(const ParameterDescriptor&) const = default;
};

// Encoder (one RY per wire) + parameterized layers + measured wires.
struct VqcStructure {
    unsigned n_wires = 0;
    std::uint64_t seed = 0;
    std::vector<Layer> layers;
    std::vector<unsigned> measured_wires;

    std::size_t parameter_count() const;

    bool operator==(const VqcStructure&) const = default;
};

// Randomized circuit: each layer's rotation kinds are drawn uniformly from
// {RX, RY, RZ} by a SplitMix64 stream keyed by (seed, layer, wire), so the
// structure is reproducible independent of construction order. All wires are
// measured.
VqcStructure build_vqc(unsigned n_wires, unsigned n_layers, std::uint64_t seed);

// Angle encoding: RY(features[i]) on wire i.
std::vector<sim::GateInstance> encode(std::span<const double> features,
                                      unsigned n_wires);

// |0..0> -> encoder -> layers (rotations then entanglers) -> <Z_w> for each
// measured wire.
std::vector<double> forward(const VqcStructure& vqc,
                            std::span<const double> params,
                            std::span<const double> features);

std::vector<ParameterDescriptor> named_parameters(const VqcStructure& vqc);

// Number of forward() calls on this thread since the last reset. Used by
// tests that pin the gradient evaluation cost.
std::uint64_t forward_call_count();
void reset_forward_call_count();

} // namespace taco::vqc
