#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace taco::scan {

// One row of the variance-scaling experiment: sampled variance of
// d<Z_0>/d(theta_0) across random circuits of a given width.
struct VarianceRow {
    unsigned n_qubits;
    unsigned n_layers;
    std::size_t n_samples;
    double variance;       // population variance across samples
    double standard_error; // of the variance estimate
};

using VarianceTable = std::vector<VarianceRow>;

// For each qubit count n: draw n_samples random structures with
// n * layers_per_qubit layers (depth grows with width so the decay is visible
// at desk scale), parameters uniform in [-pi, pi], and record the population
// variance of the parameter-shift derivative of <Z_0> w.r.t. parameter 0.
// Rows use independent derived seeds.
VarianceTable variance_scaling_experiment(std::span<const unsigned> qubit_counts,
                                          unsigned layers_per_qubit,
                                          std::size_t n_samples,
                                          std::uint64_t seed);

// Least-squares slope of ln(variance) vs n_qubits. Requires >= 3 rows, all
// with positive variance.
double fit_log_slope(const VarianceTable& table);

// Header: n_qubits,n_layers,n_samples,variance,stderr
void write_variance_csv(const VarianceTable& table, std::ostream& out);

} // namespace taco::scan
