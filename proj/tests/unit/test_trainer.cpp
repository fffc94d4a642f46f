#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_helpers.hpp"
#include "taco/train/trainer.hpp"
#include "taco/util/rng.hpp"

using namespace taco;
using namespace taco::train;

namespace {
constexpr double kPi = std::numbers::pi;

TrainingConfig small_config() {
    TrainingConfig cfg;
    cfg.n_wires = 2;
    cfg.n_layers = 1;
    cfg.epochs = 5;
    cfg.n_train = 8;
    cfg.n_test = 8;
    cfg.batch_size = 8;
    return cfg;
}

} // namespace

TEST_CASE("evaluate: counting and tie-break") {
    const auto vqc = helpers::single_ry_circuit();
    data::Dataset ds;
    ds.samples = {{{0.0}, +1}, {{kPi}, -1}};
    // theta = 0: predictions cos(0)=1 and cos(pi)=-1, both correct.
    CHECK(evaluate(vqc, std::vector<double>{0.0}, ds) == 1.0);
    // flip labels: all wrong
    ds.samples = {{{0.0}, -1}, {{kPi}, +1}};
    CHECK(evaluate(vqc, std::vector<double>{0.0}, ds) == 0.0);
    // <Z> = 0 counts as +1
    ds.samples = {{{kPi / 2}, +1}};
    CHECK(evaluate(vqc, std::vector<double>{0.0}, ds) == 1.0);

    CHECK_THROWS_AS(evaluate(vqc, std::vector<double>{0.0}, data::Dataset{}),
                    std::invalid_argument);
}

TEST_CASE("train is a pure function of its config") {
    const TrainingConfig cfg = small_config();
    const auto run1 = train::train(cfg, {});
    const auto run2 = train::train(cfg, {});
    REQUIRE(run1.size() == cfg.epochs);
    REQUIRE(run2.size() == cfg.epochs);
    for (std::size_t i = 0; i < run1.size(); ++i) {
        CHECK(run1[i].epoch == i + 1);
        CHECK(run1[i].train_loss == run2[i].train_loss);
        CHECK(run1[i].test_accuracy == run2[i].test_accuracy);
        CHECK(run1[i].gradient.gradients == run2[i].gradient.gradients);
        CHECK(run1[i].gradient.gradients.size() == 2);
        CHECK(run1[i].test_accuracy >= 0.0);
        CHECK(run1[i].test_accuracy <= 1.0);
    }
}

TEST_CASE("update rule: params follow theta -= lr * grad exactly") {
    TrainingConfig cfg = small_config();
    cfg.epochs = 4;
    const auto records = train::train(cfg, {});

    // Reconstruct the trajectory from the recorded gradients and verify the
    // final loss matches bit-for-bit.
    const auto vqc = vqc::build_vqc(cfg.n_wires, cfg.n_layers, cfg.structure_seed);
    std::vector<double> params(vqc.parameter_count());
    rng::SplitMix64 init(rng::derive_key(cfg.param_init_seed, 0));
    for (auto& p : params) p = init.uniform(-kPi, kPi);
    const auto train_set = config_train_set(cfg);
    for (const auto& rec : records) {
        for (std::size_t k = 0; k < params.size(); ++k) {
            params[k] -= cfg.learning_rate * rec.gradient.gradients[k];
        }
    }
    CHECK(grad::loss(vqc, params, train_set.samples) ==
          records.back().train_loss);
}

TEST_CASE("sinks observe each epoch before the next one starts") {
    TrainingConfig cfg = small_config();
    cfg.epochs = 3;

    struct CountingSink final : EpochSink {
        const TrainingConfig* cfg;
        std::size_t p_count;
        std::vector<std::uint64_t> forward_counts;
        void on_epoch(const EpochRecord&) override {
            forward_counts.push_back(vqc::forward_call_count());
        }
    };
    CountingSink sink;
    sink.cfg = &cfg;
    sink.p_count = cfg.n_wires * cfg.n_layers;

    vqc::reset_forward_call_count();
    EpochSink* sinks[] = {&sink};
    train::train(cfg, sinks);

    // Per epoch: B (2P+1) gradient forwards + n_train loss + n_test eval.
    const std::uint64_t per_epoch =
        cfg.batch_size * (2 * sink.p_count + 1) + cfg.n_train + cfg.n_test;
    REQUIRE(sink.forward_counts.size() == 3);
    for (std::size_t t = 0; t < 3; ++t) {
        CHECK(sink.forward_counts[t] == (t + 1) * per_epoch);
    }
}

TEST_CASE("mini-batches are seeded and deterministic") {
    TrainingConfig cfg = small_config();
    cfg.n_train = 16;
    cfg.batch_size = 4;
    const auto run1 = train::train(cfg, {});
    const auto run2 = train::train(cfg, {});
    for (std::size_t i = 0; i < run1.size(); ++i) {
        CHECK(run1[i].gradient.gradients == run2[i].gradient.gradients);
    }
}

TEST_CASE("single-parameter training reduces the loss") {
    TrainingConfig cfg;
    cfg.n_wires = 1;
    cfg.n_layers = 1;
    cfg.epochs = 30;
    cfg.learning_rate = 0.1;
    cfg.n_train = 16;
    cfg.n_test = 16;
    cfg.batch_size = 16;
    const auto records = train::train(cfg, {});
    CHECK(records.back().train_loss < records.front().train_loss);
}

TEST_CASE("config validation") {
    TrainingConfig cfg = small_config();
    cfg.epochs = 0;
    CHECK_THROWS_AS(train::train(cfg, {}), std::invalid_argument);
    cfg = small_config();
    cfg.learning_rate = 0.0;
    CHECK_THROWS_AS(train::train(cfg, {}), std::invalid_argument);
    cfg = small_config();
    cfg.batch_size = 0;
    CHECK_THROWS_AS(train::train(cfg, {}), std::invalid_argument);
}
