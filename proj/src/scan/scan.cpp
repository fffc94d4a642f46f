#include "taco/scan/scan.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "taco/grad/gradient.hpp"
#include "taco/util/format.hpp"
#include "taco/util/rng.hpp"
#include "taco/vqc/structure.hpp"

namespace taco::scan {

namespace {

constexpr std::uint64_t kStructureTag = 1;
constexpr std::uint64_t kParamsTag = 2;

} // namespace

VarianceTable variance_scaling_experiment(std::span<const unsigned> qubit_counts,
                                          unsigned layers_per_qubit,
                                          std::size_t n_samples,
                                          std::uint64_t seed) {
    if (qubit_counts.empty() || layers_per_qubit == 0) {
        throw std::invalid_argument("scan: empty qubit list or zero layers");
    }
    if (n_samples < 2) {
        throw std::invalid_argument("scan: need at least 2 samples");
    }
    for (unsigned n : qubit_counts) {
        if (n < 2) {
            throw std::invalid_argument("scan: qubit counts must be >= 2");
        }
    }

    VarianceTable table;
    table.reserve(qubit_counts.size());
    for (unsigned n : qubit_counts) {
        const unsigned n_layers = n * layers_per_qubit;
        const std::uint64_t row_seed = rng::derive_key(seed, n);
        const std::vector<double> features(n, 0.0);

        std::vector<double> grads;
        grads.reserve(n_samples);
        for (std::size_t s = 0; s < n_samples; ++s) {
            const vqc::VqcStructure vqc = vqc::build_vqc(
                n, n_layers, rng::derive_key(row_seed, s, kStructureTag));
            rng::SplitMix64 pgen(rng::derive_key(row_seed, s, kParamsTag));
            std::vector<double> params(vqc.parameter_count());
            for (double& p : params) {
                p = pgen.uniform(-std::numbers::pi, std::numbers::pi);
            }
            grads.push_back(grad::expectation_gradient(vqc, params, features, 0));
        }

        double mean = 0.0;
        for (double g : grads) {
            mean += g;
        }
        mean /= static_cast<double>(n_samples);
        double m2 = 0.0, m4 = 0.0;
        for (double g : grads) {
            const double d = g - mean;
            m2 += d * d;
            m4 += d * d * d * d;
        }
        m2 /= static_cast<double>(n_samples);
        m4 /= static_cast<double>(n_samples);
        // Standard error of the population-variance estimator.
        const double se =
            std::sqrt(std::max(0.0, m4 - m2 * m2) / static_cast<double>(n_samples));
        table.push_back(VarianceRow{n, n_layers, n_samples, m2, se});
    }
    return table;
}

double fit_log_slope(const VarianceTable& table) {
    if (table.size() < 3) {
        throw std::invalid_argument("fit_log_slope: need >= 3 rows");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const VarianceRow& row : table) {
        if (!(row.variance > 0.0)) {
            throw std::invalid_argument("fit_log_slope: non-positive variance row");
        }
        const double x = row.n_qubits;
        const double y = std::log(row.variance);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(table.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void write_variance_csv(const VarianceTable& table, std::ostream& out) {
    out << "n_qubits,n_layers,n_samples,variance,stderr\n";
    for (const VarianceRow& row : table) {
        out << row.n_qubits << ',' << row.n_layers << ',' << row.n_samples
            << ',' << fmt::sci6(row.variance) << ','
            << fmt::sci6(row.standard_error) << '\n';
    }
}

} // namespace taco::scan
