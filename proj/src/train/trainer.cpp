#include "taco/train/trainer.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "taco/util/rng.hpp"

namespace taco::train {

namespace {

// Stream tags for deriving independent sub-seeds from config seeds.
constexpr std::uint64_t kTestSetTag = 0x7e57;
constexpr std::uint64_t kShuffleTag = 0x5481f;

std::vector<data::Sample> draw_batch(const data::Dataset& train_set,
                                     const TrainingConfig& config,
                                     unsigned epoch) {
    const std::size_t n = train_set.samples.size();
    if (config.batch_size >= n) {
        return train_set.samples;
    }
    // Seeded Fisher-Yates shuffle per epoch, then take the first batch_size.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    rng::SplitMix64 gen(rng::derive_key(config.dataset_seed, kShuffleTag, epoch));
    for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(idx[i], idx[gen.below(i + 1)]);
    }
    std::vector<data::Sample> batch;
    batch.reserve(config.batch_size);
    for (unsigned i = 0; i < config.batch_size; ++i) {
        batch.push_back(train_set.samples[idx[i]]);
    }
    return batch;
}

} // namespace

void validate_config(const TrainingConfig& config) {
    if (config.n_wires == 0 || config.n_layers == 0) {
        throw std::invalid_argument("n_wires and n_layers must be >= 1");
    }
    if (config.epochs == 0) {
        throw std::invalid_argument("epochs must be >= 1");
    }
    if (!(config.learning_rate > 0.0) || !std::isfinite(config.learning_rate)) {
        throw std::invalid_argument("learning_rate must be finite and > 0");
    }
    if (config.batch_size == 0 || config.n_train == 0 || config.n_test == 0) {
        throw std::invalid_argument("counts must be positive");
    }
}

double evaluate(const vqc::VqcStructure& vqc, std::span<const double> params,
                const data::Dataset& dataset) {
    if (dataset.samples.empty()) {
        throw std::invalid_argument("evaluate: empty dataset");
    }
    std::size_t correct = 0;
    for (const data::Sample& s : dataset.samples) {
        const double z = grad::predict(vqc, params, s.features);
        const int predicted = z >= 0.0 ? +1 : -1; // sign(0) = +1
        if (predicted == s.label) {
            ++correct;
        }
    }
    return static_cast<double>(correct) /
           static_cast<double>(dataset.samples.size());
}

std::vector<EpochRecord> train_loop(const vqc::VqcStructure& vqc,
                                    const data::Dataset& train_set,
                                    const data::Dataset& test_set,
                                    const TrainingConfig& config,
                                    std::span<EpochSink* const> sinks) {
    validate_config(config);
    if (train_set.samples.empty() || test_set.samples.empty()) {
        throw std::invalid_argument("datasets must be non-empty");
    }

    const std::size_t p_count = vqc.parameter_count();
    std::vector<double> params(p_count);
    rng::SplitMix64 init(rng::derive_key(config.param_init_seed, 0));
    for (double& p : params) {
        p = init.uniform(-std::numbers::pi, std::numbers::pi);
    }

    std::vector<EpochRecord> records;
    records.reserve(config.epochs);
    for (unsigned epoch = 1; epoch <= config.epochs; ++epoch) {
        const std::vector<data::Sample> batch =
            draw_batch(train_set, config, epoch);
        std::vector<double> gradient =
            grad::parameter_shift_gradient(vqc, params, batch);
        for (std::size_t k = 0; k < p_count; ++k) {
            if (!std::isfinite(gradient[k])) {
                throw std::runtime_error(
                    "non-finite gradient at epoch " + std::to_string(epoch) +
                    ", parameter " + std::to_string(k));
            }
            params[k] -= config.learning_rate * gradient[k];
        }
        const double train_loss = grad::loss(vqc, params, train_set.samples);
        if (!std::isfinite(train_loss)) {
            throw std::runtime_error("non-finite loss at epoch " +
                                     std::to_string(epoch));
        }
        const double test_accuracy = evaluate(vqc, params, test_set);
        records.push_back(EpochRecord{
            epoch, train_loss, test_accuracy,
            grad::GradientRecord{epoch, std::move(gradient)}});
        // Run-time contract: sinks see epoch t before epoch t+1 starts.
        for (EpochSink* sink : sinks) {
            sink->on_epoch(records.back());
        }
    }
    return records;
}

data::Dataset config_train_set(const TrainingConfig& config) {
    if (!config.train_csv.empty()) {
        return data::load_dataset_csv(config.train_csv);
    }
    return data::make_synthetic_dataset(config.n_wires, config.n_train,
                                        config.dataset_seed);
}

data::Dataset config_test_set(const TrainingConfig& config) {
    if (!config.test_csv.empty()) {
        return data::load_dataset_csv(config.test_csv);
    }
    return data::make_synthetic_dataset(
        config.n_wires, config.n_test,
        rng::derive_key(config.dataset_seed, kTestSetTag));
}

std::vector<EpochRecord> train(const TrainingConfig& config,
                               std::span<EpochSink* const> sinks) {
    validate_config(config);
    const vqc::VqcStructure vqc =
        vqc::build_vqc(config.n_wires, config.n_layers, config.structure_seed);
    return train_loop(vqc, config_train_set(config), config_test_set(config),
                      config, sinks);
}

} // namespace taco::train
