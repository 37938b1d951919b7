#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bibliorank/io.hpp"

namespace {

using namespace bibliorank;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitScenarioFailure = 4;

struct CliConfig {
    std::string in_path;
    std::string input_format = "counts";
    std::string output_format = "text";
    std::string indicator = "all";
    std::string scenario_path;
    std::vector<double> thresholds;
};

std::string read_stream(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        return read_stream(std::cin);
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot open " + path);
    }
    return read_stream(file);
}

LoadedDataset load(const CliConfig& config) {
    const std::string text = read_input(config.in_path);
    return load_dataset(text, *parse_input_format(config.input_format),
                        config.in_path == "-" ? "stdin" : config.in_path);
}

TableFormat output_format(const CliConfig& config) {
    return *parse_format(config.output_format);
}

int cmd_table(const CliConfig& config) {
    const LoadedDataset data = load(config);
    const IndicatorTable table = indicator_table(data.dist, data.descriptor.source);
    std::cout << write_table(table, output_format(config));
    return kExitOk;
}

// Indicators that grow with the citation count; the raw InCites scale is
// inverted and reported only when asked for by name.
const std::vector<Indicator> kAscendingIndicators = {
    Indicator::p100, Indicator::p100_prime, Indicator::piic,
    Indicator::prou, Indicator::ppag,       Indicator::p100_double_prime,
};

int cmd_classes(const CliConfig& config) {
    for (double threshold : config.thresholds) {
        if (!(threshold > 0.0 && threshold < 100.0)) {
            std::cerr << "bibliorank: threshold " << format_full(threshold)
                      << " outside (0, 100)\n";
            return kExitInputError;
        }
    }

    const CitationDistribution dist = load(config).dist;
    std::vector<Indicator> selection;
    if (config.indicator == "all") {
        selection = kAscendingIndicators;
    } else {
        selection = {*parse_indicator(config.indicator)};
    }

    const TableFormat format = output_format(config);
    std::string out;
    if (format == TableFormat::csv) {
        out += "indicator,threshold,min_citations,paper_count\n";
    }
    nlohmann::ordered_json lines = nlohmann::ordered_json::array();
    for (Indicator id : selection) {
        for (double threshold : config.thresholds) {
            const auto match = class_report(dist, id, threshold);
            switch (format) {
            case TableFormat::text:
                out += std::string(indicator_name(id)) + " >= " + format_full(threshold) + ": ";
                out += match ? std::to_string(match->min_citations) + " citations, " +
                                   std::to_string(match->paper_count) + " papers\n"
                             : std::string("no level qualifies\n");
                break;
            case TableFormat::csv:
                out += std::string(indicator_name(id)) + "," + format_full(threshold) + ",";
                out += match ? std::to_string(match->min_citations) + "," +
                                   std::to_string(match->paper_count) + "\n"
                             : std::string(",\n");
                break;
            case TableFormat::json: {
                nlohmann::ordered_json entry;
                entry["indicator"] = indicator_name(id);
                entry["threshold"] = threshold;
                entry["min_citations"] =
                    match ? nlohmann::ordered_json(match->min_citations) : nlohmann::ordered_json();
                entry["paper_count"] =
                    match ? nlohmann::ordered_json(match->paper_count) : nlohmann::ordered_json();
                lines.push_back(std::move(entry));
                break;
            }
            }
        }
    }
    if (format == TableFormat::json) {
        out = lines.dump(2) + "\n";
    }
    std::cout << out;
    return kExitOk;
}

int cmd_scenario(const CliConfig& config) {
    const CitationDistribution base = load(config).dist;
    const ScenarioScript script = parse_scenario(read_input(config.scenario_path));

    const Scenario scenario{script.name, base, script.steps};
    const std::vector<ScenarioStep> steps = run_scenario(scenario);

    std::vector<Indicator> escape_ids;
    std::optional<Indicator> gain_filter;
    if (config.indicator == "all") {
        escape_ids = {Indicator::p100_prime, Indicator::ppag, Indicator::p100_double_prime};
    } else {
        const Indicator chosen = *parse_indicator(config.indicator);
        escape_ids = {chosen};
        gain_filter = chosen;
    }

    std::vector<ParadoxReport> reports;
    reports.reserve(steps.size());
    for (std::size_t k = 0; k < steps.size(); ++k) {
        ParadoxReport report;
        if (k > 0) {
            report = detect_counterintuitive(steps[k - 1].table, steps[k].table,
                                             [&] {
                                                 const auto touched =
                                                     steps[k].mutation->touched_values();
                                                 return std::set<long long>(touched.begin(),
                                                                            touched.end());
                                             }());
            if (gain_filter) {
                std::erase_if(report.counterintuitive_gains,
                              [&](const CounterintuitiveGain& gain) {
                                  return gain.indicator != *gain_filter;
                              });
            }
        }
        for (Indicator id : escape_ids) {
            const auto escapes = detect_interval_escapes(steps[k].table, id);
            report.interval_escapes.insert(report.interval_escapes.end(), escapes.begin(),
                                           escapes.end());
        }
        reports.push_back(std::move(report));
    }

    std::cout << write_scenario_run(scenario.name, steps, reports, output_format(config));
    return kExitOk;
}

int cmd_plot(const CliConfig& config) {
    const LoadedDataset data = load(config);
    const IndicatorTable table = indicator_table(data.dist, data.descriptor.source);
    std::cout << write_paper_series(table);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Percentile-based citation impact indicators over a reference set"};
    app.require_subcommand(1);

    CliConfig config;
    const std::vector<std::string> indicator_choices = {
        "all",  "p100", "p100_prime", "incites", "piic", "prou", "ppag", "p100_double_prime",
    };

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--in", config.in_path, "dataset path, or - for stdin")->required();
        cmd->add_option("--input-format", config.input_format,
                        "counts: one citation count per line; aggregated: u,n levels")
            ->check(CLI::IsMember({"counts", "aggregated"}));
        cmd->add_option("--format", config.output_format, "output format")
            ->check(CLI::IsMember({"text", "csv", "json"}));
    };

    CLI::App* table_cmd = app.add_subcommand("table", "indicator table for a dataset");
    add_common(table_cmd);

    CLI::App* classes_cmd =
        app.add_subcommand("classes", "minimum citations reaching percentile thresholds");
    add_common(classes_cmd);
    classes_cmd->add_option("--indicator", config.indicator, "indicator to threshold")
        ->check(CLI::IsMember(indicator_choices));
    classes_cmd->add_option("--at", config.thresholds, "thresholds in (0,100), comma separated")
        ->required()
        ->delimiter(',');

    CLI::App* scenario_cmd =
        app.add_subcommand("scenario", "apply mutations and report paradoxes");
    add_common(scenario_cmd);
    scenario_cmd->add_option("--scenario", config.scenario_path, "scenario script path")
        ->required();
    scenario_cmd->add_option("--indicator", config.indicator, "restrict escape/gain detection")
        ->check(CLI::IsMember(indicator_choices));

    CLI::App* plot_cmd = app.add_subcommand("plot", "per-paper percentile series (plot data)");
    add_common(plot_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "bibliorank: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (table_cmd->parsed()) {
            return cmd_table(config);
        }
        if (classes_cmd->parsed()) {
            return cmd_classes(config);
        }
        if (scenario_cmd->parsed()) {
            return cmd_scenario(config);
        }
        return cmd_plot(config);
    } catch (const ScenarioStepError& e) {
        std::cerr << "bibliorank: " << e.what() << "\n";
        return kExitScenarioFailure;
    } catch (const DegenerateDistribution& e) {
        std::cerr << "bibliorank: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const Error& e) {
        std::cerr << "bibliorank: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "bibliorank: " << e.what() << "\n";
        return 1;
    }
}
