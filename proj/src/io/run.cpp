#include "taco/io/run.hpp"

#include <chrono>
#include <fstream>
#include <json.hpp>
#include <stdexcept>

#include "taco/engine/feedback.hpp"
#include "taco/io/events.hpp"
#include "taco/io/serialize.hpp"

namespace taco::io {

using nlohmann::json;

namespace {

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_manifest(const std::filesystem::path& path, const json& manifest) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open manifest: " + path.string());
    }
    out << manifest.dump(2) << '\n';
}

json read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open manifest: " + path.string());
    }
    json j;
    in >> j;
    return j;
}

// Live sink: feeds each epoch through the estimator and writes the epoch
// summary, gradient lines, gate-type lines, and feedback lines, flushing at
// epoch granularity so the files are tailable mid-run.
class TacoSink final : public train::EpochSink {
  public:
    TacoSink(const engine::EstimatorSettings& settings,
             std::vector<vqc::ParameterDescriptor> descriptors,
             const std::filesystem::path& events_path,
             const std::filesystem::path& feedback_path)
        : estimator_(settings, descriptors.size()),
          descriptors_(std::move(descriptors)),
          writer_(events_path.string()),
          feedback_(feedback_path, std::ios::trunc),
          feedback_path_(feedback_path) {
        if (!feedback_) {
            throw std::runtime_error("cannot open feedback file: " +
                                     feedback_path.string());
        }
    }

    void on_epoch(const train::EpochRecord& record) override {
        writer_.write_epoch_summary(record);
        const engine::BarrenPlateauReport report =
            estimator_.update(record.gradient, descriptors_);
        for (std::size_t k = 0; k < record.gradient.gradients.size(); ++k) {
            std::optional<double> wvar;
            if (report.warmed_up) {
                wvar = report.per_param_variance[k];
            }
            writer_.write_gradient_line(record.epoch, k,
                                        record.gradient.gradients[k], wvar,
                                        report.flags[k]);
        }
        for (const auto& [kind, variance] : report.per_gate_type_variance) {
            writer_.write_gate_type_line(record.epoch, kind, variance);
        }
        for (const auto& msg : engine::generate_feedback(report, descriptors_)) {
            feedback_ << msg.text << '\n';
        }
        writer_.flush();
        feedback_.flush();
        if (!feedback_) {
            throw std::runtime_error("write failed: " + feedback_path_.string());
        }
    }

  private:
    engine::BarrenPlateauEstimator estimator_;
    std::vector<vqc::ParameterDescriptor> descriptors_;
    JsonlEventWriter writer_;
    std::ofstream feedback_;
    std::filesystem::path feedback_path_;
};

} // namespace

RunOutput run_training(const train::TrainingConfig& config,
                       const std::filesystem::path& out_dir) {
    train::validate_config(config);
    std::filesystem::create_directories(out_dir);

    const vqc::VqcStructure vqc =
        vqc::build_vqc(config.n_wires, config.n_layers, config.structure_seed);

    RunOutput out;
    out.manifest_path = out_dir / "manifest.json";
    out.events_path = out_dir / "events.jsonl";
    out.feedback_path = out_dir / "feedback.txt";

    json manifest{{"tool", kToolVersion},
                  {"created", timestamp_utc()},
                  {"status", "running"},
                  {"config", to_json(config)},
                  {"structure", to_json(vqc)},
                  {"estimator", to_json(config.estimator)},
                  {"files", json::array({"events.jsonl", "feedback.txt"})}};
    write_manifest(out.manifest_path, manifest);

    TacoSink sink(config.estimator, vqc::named_parameters(vqc),
                  out.events_path, out.feedback_path);
    train::EpochSink* sinks[] = {&sink};
    try {
        out.records = train::train_loop(vqc, train::config_train_set(config),
                                        train::config_test_set(config), config,
                                        sinks);
    } catch (const std::exception& e) {
        manifest["status"] = "aborted";
        manifest["note"] = std::string("run aborted, files may be partial: ") +
                           e.what();
        write_manifest(out.manifest_path, manifest);
        throw;
    }
    manifest["status"] = "complete";
    write_manifest(out.manifest_path, manifest);
    return out;
}

train::TrainingConfig config_from_manifest(const std::filesystem::path& path) {
    return training_config_from_json(read_manifest(path).at("config"));
}

engine::EstimatorSettings settings_from_manifest(
    const std::filesystem::path& path) {
    return estimator_settings_from_json(read_manifest(path).at("estimator"));
}

std::vector<vqc::ParameterDescriptor> descriptors_from_manifest(
    const std::filesystem::path& path) {
    return vqc::named_parameters(
        structure_from_json(read_manifest(path).at("structure")));
}

} // namespace taco::io
