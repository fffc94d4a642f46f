#include <doctest.h>

#include <cmath>

#include "estimator_oracle.hpp"
#include "test_helpers.hpp"
#include "taco/engine/estimator.hpp"
#include "taco/engine/feedback.hpp"

using namespace taco;
using namespace taco::engine;
using grad::GradientRecord;
using sim::GateKind;
using vqc::ParameterDescriptor;

namespace {

std::vector<ParameterDescriptor> make_descriptors(
    const std::vector<GateKind>& kinds) {
    std::vector<ParameterDescriptor> d;
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        d.push_back(ParameterDescriptor{k, 0, static_cast<unsigned>(k), kinds[k]});
    }
    return d;
}

std::vector<BarrenPlateauReport> feed(
    BarrenPlateauEstimator& est, const std::vector<std::vector<double>>& stream,
    const std::vector<ParameterDescriptor>& descriptors) {
    std::vector<BarrenPlateauReport> reports;
    for (std::size_t t = 0; t < stream.size(); ++t) {
        reports.push_back(est.update(
            GradientRecord{static_cast<unsigned>(t + 1), stream[t]}, descriptors));
    }
    return reports;
}

} // namespace

TEST_CASE("extract_structure") {
    const auto vqc = vqc::build_vqc(2, 2, 7);
    const StructureReport report = extract_structure(vqc);
    CHECK(report.parameter_count == 4);
    CHECK(report.entangler_count == 4); // n_layers * n_wires ring
    std::size_t total = 0;
    for (const auto& [kind, count] : report.gate_kind_counts) {
        CHECK(kind != GateKind::CNOT);
        total += count;
    }
    CHECK(total == 4);
    CHECK(report.descriptors == vqc::named_parameters(vqc));
}

TEST_CASE("gate_type_variance") {
    SUBCASE("identical RY gradients give variance 0") {
        const auto d = make_descriptors({GateKind::RY, GateKind::RY});
        const auto v = gate_type_variance(std::vector<double>{0.4, 0.4}, d);
        REQUIRE(v.size() == 1);
        CHECK(v.at(GateKind::RY) == 0.0);
    }
    SUBCASE("RY gradients {+1,-1} give population variance 1") {
        const auto d = make_descriptors({GateKind::RY, GateKind::RY});
        const auto v = gate_type_variance(std::vector<double>{1.0, -1.0}, d);
        CHECK(v.at(GateKind::RY) == 1.0);
    }
    SUBCASE("absent kinds have no key; singleton kinds report 0") {
        const auto d = make_descriptors({GateKind::RY, GateKind::RZ});
        const auto v = gate_type_variance(std::vector<double>{0.5, 0.3}, d);
        CHECK(!v.contains(GateKind::RX));
        CHECK(v.at(GateKind::RZ) == 0.0);
    }
    CHECK_THROWS_AS(gate_type_variance(std::vector<double>{1.0},
                                       make_descriptors({GateKind::RY,
                                                         GateKind::RY})),
                    std::invalid_argument);
}

TEST_CASE("warm-up: no flags, absent variances before W epochs") {
    EstimatorSettings s;
    s.window = 10;
    const auto d = make_descriptors({GateKind::RY});
    BarrenPlateauEstimator est(s, 1);
    for (unsigned epoch = 1; epoch < 10; ++epoch) {
        const auto report =
            est.update(GradientRecord{epoch, {0.0}}, d); // constant 0 stream
        CHECK(!report.warmed_up);
        CHECK(!report.flags[0]);
        CHECK(!report.all_flagged);
        CHECK(std::isnan(report.per_param_variance[0]));
    }
    const auto report = est.update(GradientRecord{10, {0.0}}, d);
    CHECK(report.warmed_up);
    CHECK(report.per_param_variance[0] == 0.0);
    CHECK(report.flags[0]); // tau_abs catches zero variance
    CHECK(report.all_flagged);
}

TEST_CASE("constant non-zero stream is flagged via tau_abs") {
    EstimatorSettings s;
    const auto d = make_descriptors({GateKind::RX});
    BarrenPlateauEstimator est(s, 1);
    std::vector<std::vector<double>> stream(2 * s.window, {0.3});
    const auto reports = feed(est, stream, d);
    CHECK(reports.back().per_param_variance[0] <= 1e-30); // fp residue only
    CHECK(reports.back().flags[0]);
}

TEST_CASE("alternating +/-0.1 stream stays unflagged") {
    EstimatorSettings s;
    const auto d = make_descriptors({GateKind::RZ});
    BarrenPlateauEstimator est(s, 1);
    for (unsigned epoch = 1; epoch <= 50; ++epoch) {
        const double g = (epoch % 2) ? 0.1 : -0.1;
        const auto report = est.update(GradientRecord{epoch, {g}}, d);
        CHECK(!report.flags[0]);
        if (report.warmed_up) {
            CHECK(std::abs(report.per_param_variance[0] - 0.01) < 1e-15);
        }
    }
}

TEST_CASE("variance collapse is flagged within W epochs") {
    EstimatorSettings s;
    const auto d = make_descriptors({GateKind::RY});
    BarrenPlateauEstimator est(s, 1);
    rng::SplitMix64 gen(55);
    const unsigned change = 3 * s.window;
    unsigned first_flag = 0;
    for (unsigned epoch = 1; epoch <= change + 2 * s.window; ++epoch) {
        const double scale = epoch <= change ? 1e-1 : 1e-5;
        const double g = scale * gen.uniform(-1.0, 1.0);
        const auto report = est.update(GradientRecord{epoch, {g}}, d);
        if (report.flags[0] && first_flag == 0) {
            first_flag = epoch;
        }
    }
    CHECK(first_flag != 0);
    CHECK(first_flag <= change + s.window);
}

TEST_CASE("brute-force oracle equivalence on random streams with drops") {
    EstimatorSettings s;
    s.window = 6;
    const auto d = make_descriptors({GateKind::RX, GateKind::RY, GateKind::RZ});
    rng::SplitMix64 gen(314);
    std::vector<std::vector<double>> stream;
    for (unsigned epoch = 1; epoch <= 120; ++epoch) {
        std::vector<double> grads(3);
        for (std::size_t k = 0; k < 3; ++k) {
            double scale = 0.2;
            if (k == 0 && epoch > 40) scale = 1e-6;  // hard drop
            if (k == 1 && epoch > 80) scale = 5e-3;  // milder drop
            grads[k] = scale * gen.uniform(-1.0, 1.0);
        }
        stream.push_back(grads);
    }

    BarrenPlateauEstimator est(s, 3);
    const auto reports = feed(est, stream, d);
    const auto expected = oracle::brute_force_flags(stream, s);
    REQUIRE(reports.size() == expected.size());
    for (std::size_t t = 0; t < reports.size(); ++t) {
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(reports[t].flags[k] == expected[t][k]);
        }
    }
}

TEST_CASE("scaling the stream by c scales variances by c^2; relative flags invariant") {
    EstimatorSettings s;
    s.tau_abs = 1e-300; // effectively disable the absolute clause
    const auto d = make_descriptors({GateKind::RY, GateKind::RZ});
    rng::SplitMix64 gen(77);
    std::vector<std::vector<double>> stream;
    for (unsigned epoch = 1; epoch <= 60; ++epoch) {
        const double scale = epoch > 30 ? 1e-4 : 0.3;
        stream.push_back(
            {scale * gen.uniform(-1, 1), scale * gen.uniform(-1, 1)});
    }
    std::vector<std::vector<double>> scaled = stream;
    const double c = 3.7;
    for (auto& row : scaled) {
        for (double& g : row) g *= c;
    }

    BarrenPlateauEstimator est1(s, 2), est2(s, 2);
    const auto r1 = feed(est1, stream, d);
    const auto r2 = feed(est2, scaled, d);
    for (std::size_t t = 0; t < r1.size(); ++t) {
        CHECK(r1[t].flags == r2[t].flags);
        if (r1[t].warmed_up) {
            for (std::size_t k = 0; k < 2; ++k) {
                const double v1 = r1[t].per_param_variance[k];
                const double v2 = r2[t].per_param_variance[k];
                if (v1 > 0) {
                    CHECK(std::abs(v2 / (c * c * v1) - 1.0) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("estimator input validation") {
    EstimatorSettings s;
    const auto d = make_descriptors({GateKind::RY});
    BarrenPlateauEstimator est(s, 1);
    est.update(GradientRecord{5, {0.1}}, d);
    CHECK_THROWS_AS(est.update(GradientRecord{5, {0.1}}, d),
                    std::invalid_argument);
    CHECK_THROWS_AS(est.update(GradientRecord{6, {0.1, 0.2}}, d),
                    std::invalid_argument);
    CHECK_THROWS_AS(BarrenPlateauEstimator(EstimatorSettings{0, 1, 1, 1}, 1),
                    std::invalid_argument);
}

TEST_CASE("feedback rendering") {
    const unsigned p_total = 20;
    std::vector<GateKind> kinds(p_total, GateKind::RX);
    kinds[17] = GateKind::RY;
    const auto d = make_descriptors(kinds);

    BarrenPlateauReport report;
    report.epoch = 42;
    report.warmed_up = true;
    report.per_param_variance.assign(p_total, 0.5);
    report.flags.assign(p_total, false);
    report.per_param_variance[17] = 3.2e-9;
    report.flags[17] = true;
    report.all_flagged = false;

    SUBCASE("single flagged parameter") {
        const auto messages = generate_feedback(report, d);
        REQUIRE(messages.size() == 1);
        CHECK(messages[0].text ==
              "[BP] epoch=42 param=17 type=RY value=3.20000e-09");
        CHECK(messages[0].bp_value == 3.2e-9);
    }
    SUBCASE("no flags, no messages") {
        report.flags.assign(p_total, false);
        CHECK(generate_feedback(report, d).empty());
    }
    SUBCASE("all flagged adds the ALL hint message") {
        report.flags.assign(p_total, true);
        report.per_param_variance.assign(p_total, 1e-10);
        report.all_flagged = true;
        const auto messages = generate_feedback(report, d);
        REQUIRE(messages.size() == p_total + 1);
        CHECK(messages.back().text ==
              "[BP] epoch=42 param=ALL type=ALL value=1.00000e-10 "
              "hint=reduce_layers");
        CHECK(!messages.back().parameter_index.has_value());
    }
}
