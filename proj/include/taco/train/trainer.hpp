#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "taco/engine/estimator.hpp"
#include "taco/grad/gradient.hpp"
#include "taco/train/dataset.hpp"
#include "taco/vqc/structure.hpp"

namespace taco::train {

struct TrainingConfig {
    unsigned n_wires = 2;
    unsigned n_layers = 2;
    std::uint64_t structure_seed = 1;
    std::uint64_t param_init_seed = 2;
    std::uint64_t dataset_seed = 3;
    unsigned epochs = 50;
    double learning_rate = 0.1;
    unsigned batch_size = 32;
    unsigned n_train = 32;
    unsigned n_test = 32;
    engine::EstimatorSettings estimator;
    // When set, datasets are loaded from CSV instead of synthesized.
    std::string train_csv;
    std::string test_csv;
};

// Per-epoch telemetry handed to sinks before the next epoch starts.
struct EpochRecord {
    unsigned epoch;
    double train_loss;
    double test_accuracy; // in [0, 1]
    grad::GradientRecord gradient;
};

class EpochSink {
  public:
    virtual ~EpochSink() = default;
    virtual void on_epoch(const EpochRecord& record) = 0;
};

// Fraction of samples where sign(<Z_0>) matches the label; sign(0) = +1.
double evaluate(const vqc::VqcStructure& vqc, std::span<const double> params,
                const data::Dataset& dataset);

// Vanilla gradient descent with parameter-shift gradients. Parameters start
// uniform in [-pi, pi] from param_init_seed. Each epoch: batch gradient,
// update theta -= lr * grad, full-train loss, test accuracy, then every sink
// observes the EpochRecord before the next epoch's gradient starts.
std::vector<EpochRecord> train_loop(const vqc::VqcStructure& vqc,
                                    const data::Dataset& train_set,
                                    const data::Dataset& test_set,
                                    const TrainingConfig& config,
                                    std::span<EpochSink* const> sinks);

// Builds the structure and datasets from the config and runs train_loop.
std::vector<EpochRecord> train(const TrainingConfig& config,
                               std::span<EpochSink* const> sinks);

// Datasets exactly as train() would construct them (synthetic or CSV).
data::Dataset config_train_set(const TrainingConfig& config);
data::Dataset config_test_set(const TrainingConfig& config);

void validate_config(const TrainingConfig& config);

} // namespace taco::train
