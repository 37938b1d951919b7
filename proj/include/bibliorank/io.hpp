#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bibliorank/indicators.hpp"
#include "bibliorank/scenario.hpp"

namespace bibliorank {

enum class TableFormat { text, csv, json };

std::string_view format_name(TableFormat f) noexcept;
std::optional<TableFormat> parse_format(std::string_view name) noexcept;

/// Display rounding used by the textual formats: half away from zero,
/// fixed number of decimals. P100 prints 1 decimal, every other indicator 2.
std::string format_fixed(double value, int decimals);

/// Shortest decimal string that round-trips the exact double.
std::string format_full(double value);

/// Per-paper counts: one record per line, either a bare non-negative integer
/// or `id,count` once a literal `id,count` header line was seen. Blank lines
/// and `#` comments are ignored. Throws ParseError, NegativeCount, EmptyInput.
CitationDistribution parse_counts(std::string_view text);

/// Aggregated levels: header `u,n`, then one `u,n` record per line in any
/// order. Throws ParseError, DuplicateLevel, NonPositiveFrequency, EmptyInput.
CitationDistribution parse_aggregated(std::string_view text);

/// The aggregated form of a distribution; parse_aggregated inverts it.
std::string write_aggregated(const CitationDistribution& dist);

enum class InputFormat { counts, aggregated };

std::string_view input_format_name(InputFormat f) noexcept;
std::optional<InputFormat> parse_input_format(std::string_view name) noexcept;

/// Where a dataset came from and how many records the parser consumed
/// (papers for counts input, levels for aggregated input).
struct DatasetDescriptor {
    std::string source;
    InputFormat format = InputFormat::counts;
    long long record_count = 0;
};

struct LoadedDataset {
    CitationDistribution dist;
    DatasetDescriptor descriptor;
};

LoadedDataset load_dataset(std::string_view text, InputFormat format, std::string source_label);

/// A parsed scenario file: `scenario <name>` followed by one step per line
/// (`move <k> <from_u> <to_u>`, `add <k> <u>`, `remove <k> <u>`). The base
/// distribution is supplied separately when the scenario is run. Throws
/// ParseError, UnknownDirective.
struct ScenarioScript {
    std::string name;
    std::vector<Mutation> steps;
};

ScenarioScript parse_scenario(std::string_view text);

/// Serializes a table in descending u. csv columns are exactly
/// `u,n,i,p100,j,p100_prime,n_cum,incites,piic,prou,ppag,p100_pp`; csv and
/// text apply display rounding, json carries full-precision values plus the
/// rounded display strings. Output is byte-stable for identical inputs.
std::string write_table(const IndicatorTable& table, TableFormat format);

/// One csv row per paper (levels expanded by n), columns
/// `paper_rank,u,p100,p100_prime,piic,prou,ppag,p100_pp`, rank 1..N by
/// descending u, ties kept in level order. Values at full precision.
std::string write_paper_series(const IndicatorTable& table);

std::string write_paradox_report(const ParadoxReport& report, TableFormat format);

/// A whole scenario run: one table and one paradox report per step (index 0
/// is the base). text/csv interleave step banners, tables and text reports;
/// json emits a single document.
std::string write_scenario_run(std::string_view name, std::span<const ScenarioStep> steps,
                               std::span<const ParadoxReport> reports, TableFormat format);

} // namespace bibliorank
