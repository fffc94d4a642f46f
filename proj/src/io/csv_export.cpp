#include "taco/io/csv_export.hpp"

#include <fstream>
#include <json.hpp>
#include <map>
#include <stdexcept>
#include <vector>

#include "taco/sim/state_vector.hpp"
#include "taco/util/format.hpp"

namespace taco::io {

using nlohmann::json;

namespace {

struct FlagRow {
    unsigned epoch;
    std::size_t param;
    double value;
};

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path.string());
    }
    return out;
}

} // namespace

void export_csv(const std::string& events_path,
                const std::filesystem::path& out_dir,
                std::span<const vqc::ParameterDescriptor> descriptors) {
    std::ifstream in(events_path);
    if (!in) {
        throw std::runtime_error("cannot open events file: " + events_path);
    }

    struct Metrics {
        double train_loss;
        double test_accuracy;
    };
    std::vector<std::pair<unsigned, Metrics>> metrics;
    // epoch -> gate kind -> variance, epochs in order of appearance
    std::vector<std::pair<unsigned, std::map<std::string, double>>> gate_rows;
    std::vector<std::string> kind_order;
    std::vector<FlagRow> flags;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw std::runtime_error(events_path + ":" + std::to_string(lineno) +
                                     ": " + e.what());
        }
        const std::string kind = j.value("kind", "");
        if (kind == "epoch") {
            metrics.emplace_back(j.at("epoch").get<unsigned>(),
                                 Metrics{j.at("train_loss").get<double>(),
                                         j.at("test_accuracy").get<double>()});
        } else if (kind == "gate_type") {
            const unsigned epoch = j.at("epoch").get<unsigned>();
            const std::string gate = j.at("gate_kind").get<std::string>();
            if (gate_rows.empty() || gate_rows.back().first != epoch) {
                gate_rows.emplace_back(epoch, std::map<std::string, double>{});
            }
            gate_rows.back().second[gate] = j.at("variance").get<double>();
            bool seen = false;
            for (const auto& k : kind_order) {
                seen = seen || k == gate;
            }
            if (!seen) {
                kind_order.push_back(gate);
            }
        } else if (kind == "gradient") {
            if (j.at("flagged").get<bool>()) {
                flags.push_back(FlagRow{j.at("epoch").get<unsigned>(),
                                        j.at("param").get<std::size_t>(),
                                        j.at("window_variance").get<double>()});
            }
        } else if (!kind.empty()) {
            throw std::runtime_error(events_path + ":" + std::to_string(lineno) +
                                     ": unknown event kind '" + kind + "'");
        }
    }

    std::filesystem::create_directories(out_dir);

    auto mout = open_out(out_dir / "metrics.csv");
    mout << "epoch,train_loss,test_accuracy\n";
    for (const auto& [epoch, m] : metrics) {
        mout << epoch << ',' << fmt::sci6(m.train_loss) << ','
             << fmt::sci6(m.test_accuracy) << '\n';
    }

    // Columns in fixed RX,RY,RZ order, restricted to kinds present.
    std::vector<std::string> columns;
    for (const char* k : {"RX", "RY", "RZ"}) {
        for (const auto& seen : kind_order) {
            if (seen == k) {
                columns.push_back(k);
                break;
            }
        }
    }
    auto gout = open_out(out_dir / "gate_variance.csv");
    gout << "epoch";
    for (const auto& c : columns) {
        gout << ',' << c;
    }
    gout << '\n';
    for (const auto& [epoch, row] : gate_rows) {
        gout << epoch;
        for (const auto& c : columns) {
            const auto it = row.find(c);
            gout << ',';
            if (it != row.end()) {
                gout << fmt::sci6(it->second);
            }
        }
        gout << '\n';
    }

    auto fout = open_out(out_dir / "flags.csv");
    fout << "epoch,param,type,value\n";
    for (const FlagRow& f : flags) {
        if (f.param >= descriptors.size()) {
            throw std::runtime_error("flags.csv: parameter " +
                                     std::to_string(f.param) +
                                     " has no descriptor");
        }
        fout << f.epoch << ',' << f.param << ','
             << sim::to_string(descriptors[f.param].gate_kind) << ','
             << fmt::sci6(f.value) << '\n';
    }
}

} // namespace taco::io
