#pragma once

#include <span>
#include <vector>

#include "taco/train/dataset.hpp"
#include "taco/vqc/structure.hpp"

namespace taco::grad {

// Per-epoch gradient telemetry: dL/d(theta_k) for every trainable parameter.
struct GradientRecord {
    unsigned epoch;
    std::vector<double> gradients;
};

// <Z_0> of the circuit output; the classifier head.
double predict(const vqc::VqcStructure& vqc, std::span<const double> params,
               std::span<const double> features);

// MSE against +/-1 labels on <Z_0>: mean over batch of (<Z_0> - y)^2.
double loss(const vqc::VqcStructure& vqc, std::span<const double> params,
            std::span<const data::Sample> batch);

// Exact parameter-shift gradient of the MSE loss:
//   d<Z_0>/dtheta_k = (<Z_0>(theta_k + pi/2) - <Z_0>(theta_k - pi/2)) / 2
//   dL/dtheta_k     = mean over batch of 2 (<Z_0> - y) d<Z_0>/dtheta_k
std::vector<double> parameter_shift_gradient(const vqc::VqcStructure& vqc,
                                             std::span<const double> params,
                                             std::span<const data::Sample> batch);

// Central-difference verification oracle: (L(t+h) - L(t-h)) / 2h.
std::vector<double> finite_difference_gradient(
    const vqc::VqcStructure& vqc, std::span<const double> params,
    std::span<const data::Sample> batch, double h = 1e-3);

// Parameter-shift derivative of the raw expectation <Z_0> with respect to one
// parameter (no dataset/loss). Used by the variance-scaling scan.
double expectation_gradient(const vqc::VqcStructure& vqc,
                            std::span<const double> params,
                            std::span<const double> features,
                            std::size_t param_index);

} // namespace taco::grad
