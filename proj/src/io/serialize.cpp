#include "taco/io/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace taco::io {

using nlohmann::json;

json to_json(const engine::EstimatorSettings& s) {
    return json{{"window", s.window},
                {"tau_abs", s.tau_abs},
                {"tau_rel", s.tau_rel},
                {"drop_ratio", s.drop_ratio}};
}

engine::EstimatorSettings estimator_settings_from_json(const json& j) {
    engine::EstimatorSettings s;
    s.window = j.value("window", s.window);
    s.tau_abs = j.value("tau_abs", s.tau_abs);
    s.tau_rel = j.value("tau_rel", s.tau_rel);
    s.drop_ratio = j.value("drop_ratio", s.drop_ratio);
    return s;
}

json to_json(const train::TrainingConfig& c) {
    json j{{"n_wires", c.n_wires},
           {"n_layers", c.n_layers},
           {"structure_seed", c.structure_seed},
           {"param_init_seed", c.param_init_seed},
           {"dataset_seed", c.dataset_seed},
           {"epochs", c.epochs},
           {"learning_rate", c.learning_rate},
           {"batch_size", c.batch_size},
           {"n_train", c.n_train},
           {"n_test", c.n_test},
           {"estimator", to_json(c.estimator)}};
    if (!c.train_csv.empty()) {
        j["train_csv"] = c.train_csv;
    }
    if (!c.test_csv.empty()) {
        j["test_csv"] = c.test_csv;
    }
    return j;
}

train::TrainingConfig training_config_from_json(const json& j) {
    train::TrainingConfig c;
    c.n_wires = j.value("n_wires", c.n_wires);
    c.n_layers = j.value("n_layers", c.n_layers);
    c.structure_seed = j.value("structure_seed", c.structure_seed);
    c.param_init_seed = j.value("param_init_seed", c.param_init_seed);
    c.dataset_seed = j.value("dataset_seed", c.dataset_seed);
    c.epochs = j.value("epochs", c.epochs);
    c.learning_rate = j.value("learning_rate", c.learning_rate);
    c.batch_size = j.value("batch_size", c.batch_size);
    c.n_train = j.value("n_train", c.n_train);
    c.n_test = j.value("n_test", c.n_test);
    if (j.contains("estimator")) {
        c.estimator = estimator_settings_from_json(j.at("estimator"));
    }
    c.train_csv = j.value("train_csv", std::string{});
    c.test_csv = j.value("test_csv", std::string{});
    return c;
}

json to_json(const vqc::VqcStructure& vqc) {
    json layers = json::array();
    for (const auto& layer : vqc.layers) {
        json rotations = json::array();
        for (auto kind : layer.rotations) {
            rotations.push_back(std::string(sim::to_string(kind)));
        }
        json entanglers = json::array();
        for (const auto& [control, target] : layer.entanglers) {
            entanglers.push_back(json::array({control, target}));
        }
        layers.push_back(
            json{{"rotations", rotations}, {"entanglers", entanglers}});
    }
    return json{{"n_wires", vqc.n_wires},
                {"n_layers", vqc.layers.size()},
                {"seed", vqc.seed},
                {"layers", layers},
                {"measured_wires", vqc.measured_wires}};
}

vqc::VqcStructure structure_from_json(const json& j) {
    vqc::VqcStructure vqc;
    vqc.n_wires = j.at("n_wires").get<unsigned>();
    vqc.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& jl : j.at("layers")) {
        vqc::Layer layer;
        for (const auto& name : jl.at("rotations")) {
            layer.rotations.push_back(
                sim::gate_kind_from_string(name.get<std::string>()));
        }
        for (const auto& pair : jl.at("entanglers")) {
            layer.entanglers.emplace_back(pair.at(0).get<unsigned>(),
                                          pair.at(1).get<unsigned>());
        }
        vqc.layers.push_back(std::move(layer));
    }
    vqc.measured_wires = j.at("measured_wires").get<std::vector<unsigned>>();
    return vqc;
}

train::TrainingConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("config parse error in " + path + ": " +
                                 e.what());
    }
    return training_config_from_json(j);
}

} // namespace taco::io
