// taco: run-time QNN training telemetry and barren-plateau analysis.
//
// Subcommands:
//   train   --config <json> --out <dir>     train + live analysis
//   scan    --qubits 2,4,6,8 ...            gradient-variance scaling scan
//   analyze --events <file> [...]           offline replay of the estimator
//   report  --events <file> --out <dir>     plot-ready CSV export
//
// Exit codes: 0 success, 1 usage error, 2 runtime error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "taco/io/analyze.hpp"
#include "taco/io/csv_export.hpp"
#include "taco/io/run.hpp"
#include "taco/io/serialize.hpp"
#include "taco/scan/scan.hpp"
#include "taco/util/format.hpp"

namespace fs = std::filesystem;

namespace {

// Resolves manifest.json next to the events file unless given explicitly.
fs::path resolve_manifest(const std::string& events, const std::string& flag) {
    if (!flag.empty()) {
        return flag;
    }
    const fs::path candidate = fs::path(events).parent_path() / "manifest.json";
    if (!fs::exists(candidate)) {
        throw std::runtime_error(
            "no manifest found next to events file; pass --manifest");
    }
    return candidate;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"TACO: QNN training telemetry and barren-plateau analysis"};
    app.require_subcommand(1);

    // train
    auto* train_cmd = app.add_subcommand("train", "train a VQC with live analysis");
    std::string config_path, train_out;
    train_cmd->add_option("--config", config_path, "training config JSON")
        ->required();
    train_cmd->add_option("--out", train_out, "output run directory")->required();

    // scan
    auto* scan_cmd =
        app.add_subcommand("scan", "gradient-variance scaling experiment");
    std::vector<unsigned> qubits{2, 4, 6, 8};
    unsigned layers_per_qubit = 2;
    std::size_t samples = 200;
    std::uint64_t scan_seed = 1;
    std::string scan_out;
    scan_cmd->add_option("--qubits", qubits, "comma-separated qubit counts")
        ->delimiter(',');
    scan_cmd->add_option("--layers-per-qubit", layers_per_qubit,
                         "layers per qubit of width");
    scan_cmd->add_option("--samples", samples, "random circuits per row");
    scan_cmd->add_option("--seed", scan_seed, "experiment seed");
    scan_cmd->add_option("--out", scan_out, "output directory")->required();

    // analyze
    auto* analyze_cmd =
        app.add_subcommand("analyze", "replay the estimator over an events file");
    std::string events_path, manifest_flag, analyze_out;
    bool has_window = false, has_tau_abs = false, has_tau_rel = false,
         has_rho = false;
    unsigned opt_window = 0;
    double opt_tau_abs = 0, opt_tau_rel = 0, opt_rho = 0;
    analyze_cmd->add_option("--events", events_path, "events.jsonl path")
        ->required();
    analyze_cmd->add_option("--manifest", manifest_flag,
                            "manifest.json (default: next to events file)");
    analyze_cmd->add_option("--out", analyze_out,
                            "feedback output file (default: stdout)");
    analyze_cmd->add_option("--window", opt_window, "variance window (epochs)")
        ->each([&](const std::string&) { has_window = true; });
    analyze_cmd->add_option("--tau-abs", opt_tau_abs, "absolute variance floor")
        ->each([&](const std::string&) { has_tau_abs = true; });
    analyze_cmd
        ->add_option("--tau-rel", opt_tau_rel, "relative-to-baseline threshold")
        ->each([&](const std::string&) { has_tau_rel = true; });
    analyze_cmd->add_option("--rho", opt_rho, "median drop ratio")
        ->each([&](const std::string&) { has_rho = true; });

    // report
    auto* report_cmd = app.add_subcommand("report", "export plot-ready CSVs");
    std::string report_events, report_manifest, report_out;
    report_cmd->add_option("--events", report_events, "events.jsonl path")
        ->required();
    report_cmd->add_option("--manifest", report_manifest,
                           "manifest.json (default: next to events file)");
    report_cmd->add_option("--out", report_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (train_cmd->parsed()) {
            const auto config = taco::io::load_config(config_path);
            const auto out = taco::io::run_training(config, train_out);
            std::cout << "run complete: " << out.records.size()
                      << " epochs, outputs in " << train_out << "\n";
        } else if (scan_cmd->parsed()) {
            const auto table = taco::scan::variance_scaling_experiment(
                qubits, layers_per_qubit, samples, scan_seed);
            fs::create_directories(scan_out);
            const fs::path csv = fs::path(scan_out) / "scan.csv";
            std::ofstream out(csv, std::ios::trunc);
            if (!out) {
                throw std::runtime_error("cannot open " + csv.string());
            }
            taco::scan::write_variance_csv(table, out);
            std::cout << "wrote " << csv.string();
            if (table.size() >= 3) {
                std::cout << " (log-slope "
                          << taco::fmt::sci6(taco::scan::fit_log_slope(table))
                          << ")";
            }
            std::cout << "\n";
        } else if (analyze_cmd->parsed()) {
            const fs::path manifest = resolve_manifest(events_path, manifest_flag);
            auto settings = taco::io::settings_from_manifest(manifest);
            if (has_window) settings.window = opt_window;
            if (has_tau_abs) settings.tau_abs = opt_tau_abs;
            if (has_tau_rel) settings.tau_rel = opt_tau_rel;
            if (has_rho) settings.drop_ratio = opt_rho;
            const auto descriptors =
                taco::io::descriptors_from_manifest(manifest);
            const auto result =
                taco::io::analyze_events(events_path, settings, descriptors);
            if (analyze_out.empty()) {
                for (const auto& line : result.feedback_lines) {
                    std::cout << line << "\n";
                }
            } else {
                std::ofstream out(analyze_out, std::ios::trunc);
                if (!out) {
                    throw std::runtime_error("cannot open " + analyze_out);
                }
                for (const auto& line : result.feedback_lines) {
                    out << line << '\n';
                }
            }
        } else if (report_cmd->parsed()) {
            const fs::path manifest =
                resolve_manifest(report_events, report_manifest);
            const auto descriptors =
                taco::io::descriptors_from_manifest(manifest);
            taco::io::export_csv(report_events, report_out, descriptors);
            std::cout << "wrote metrics.csv, gate_variance.csv, flags.csv in "
                      << report_out << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
