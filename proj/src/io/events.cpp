#include "taco/io/events.hpp"

#include <json.hpp>
#include <stdexcept>

namespace taco::io {

using nlohmann::json;

JsonlEventWriter::JsonlEventWriter(const std::string& path)
    : path_(path), out_(path, std::ios::trunc) {
    if (!out_) {
        throw std::runtime_error("cannot open events file: " + path);
    }
}

void JsonlEventWriter::write_line(const std::string& line) {
    out_ << line << '\n';
    if (!out_) {
        throw std::runtime_error("write failed: " + path_);
    }
}

void JsonlEventWriter::write_epoch_summary(const train::EpochRecord& record) {
    write_line(json{{"kind", "epoch"},
                    {"epoch", record.epoch},
                    {"train_loss", record.train_loss},
                    {"test_accuracy", record.test_accuracy}}
                   .dump());
}

void JsonlEventWriter::write_gradient_line(unsigned epoch, std::size_t param,
                                           double grad,
                                           std::optional<double> window_variance,
                                           bool flagged) {
    json j{{"kind", "gradient"},
           {"epoch", epoch},
           {"param", param},
           {"grad", grad},
           {"flagged", flagged}};
    if (window_variance) {
        j["window_variance"] = *window_variance;
    } else {
        j["window_variance"] = nullptr;
    }
    write_line(j.dump());
}

void JsonlEventWriter::write_gate_type_line(unsigned epoch, sim::GateKind kind,
                                            double variance) {
    write_line(json{{"kind", "gate_type"},
                    {"epoch", epoch},
                    {"gate_kind", std::string(sim::to_string(kind))},
                    {"variance", variance}}
                   .dump());
}

void JsonlEventWriter::flush() {
    out_.flush();
    if (!out_) {
        throw std::runtime_error("flush failed: " + path_);
    }
}

} // namespace taco::io
