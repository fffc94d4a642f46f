#pragma once

#include <fstream>
#include <optional>
#include <string>

#include "taco/engine/estimator.hpp"
#include "taco/train/trainer.hpp"

namespace taco::io {

// Append-only JSONL event stream. Every line is a self-describing JSON object
// with a "kind" discriminator: "epoch" (summary), "gradient" (per-parameter),
// or "gate_type" (cross-parameter variance per gate kind). Gradient values
// are written with round-trip precision so offline replay reproduces the live
// analysis exactly.
class JsonlEventWriter {
  public:
    explicit JsonlEventWriter(const std::string& path);

    void write_epoch_summary(const train::EpochRecord& record);
    void write_gradient_line(unsigned epoch, std::size_t param, double grad,
                             std::optional<double> window_variance,
                             bool flagged);
    void write_gate_type_line(unsigned epoch, sim::GateKind kind,
                              double variance);

    // Line-atomic flush; readers tailing the file never see a partial record.
    void flush();

  private:
    void write_line(const std::string& line);

    std::string path_;
    std::ofstream out_;
};

} // namespace taco::io
