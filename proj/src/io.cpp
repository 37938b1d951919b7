#include "bibliorank/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace bibliorank {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Line {
    std::size_t number = 0;
    std::string_view text; // trimmed, comments stripped
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

/// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view trimmed = trim(text.substr(start, end - start));
        if (!trimmed.empty() && trimmed.front() != '#') {
            lines.push_back({number, trimmed});
        }
        start = end + 1;
        ++number;
    }
    return lines;
}

std::optional<long long> parse_int(std::string_view token) {
    token = trim(token);
    if (token.empty()) {
        return std::nullopt;
    }
    long long value = 0;
    const auto result = std::from_chars(token.data(), token.data() + token.size(), value);
    if (result.ec != std::errc{} || result.ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> split_words(std::string_view s) {
    std::vector<std::string_view> words;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) {
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != ' ' && s[end] != '\t') {
            ++end;
        }
        if (end > pos) {
            words.push_back(s.substr(pos, end - pos));
        }
        pos = end;
    }
    return words;
}

std::string pad_left(const std::string& s, std::size_t width) {
    if (s.size() >= width) {
        return s;
    }
    return std::string(width - s.size(), ' ') + s;
}

ordered_json table_to_json(const IndicatorTable& table);
ordered_json report_to_json(const ParadoxReport& report);

ordered_json row_to_json(const IndicatorRow& row) {
    ordered_json display;
    display["p100"] = format_fixed(row.p100, 1);
    display["p100_prime"] = format_fixed(row.p100_prime, 2);
    display["incites"] = format_fixed(row.incites, 2);
    display["piic"] = format_fixed(row.piic, 2);
    display["prou"] = format_fixed(row.prou, 2);
    display["ppag"] = format_fixed(row.ppag, 2);
    display["p100_pp"] = format_fixed(row.p100_double_prime, 2);

    ordered_json j;
    j["u"] = row.u;
    j["n"] = row.n;
    j["i"] = row.i;
    j["p100"] = row.p100;
    j["j"] = row.j;
    j["p100_prime"] = row.p100_prime;
    j["n_cum"] = row.n_cum;
    j["incites"] = row.incites;
    j["piic"] = row.piic;
    j["prou"] = row.prou;
    j["ppag"] = row.ppag;
    j["p100_pp"] = row.p100_double_prime;
    j["display"] = std::move(display);
    return j;
}

ordered_json table_to_json(const IndicatorTable& table) {
    ordered_json j;
    j["provenance"] = table.provenance;
    long long papers = 0;
    for (const IndicatorRow& row : table.rows) {
        papers += row.n;
    }
    j["total_papers"] = papers;
    j["rows"] = ordered_json::array();
    for (const IndicatorRow& row : table.rows) {
        j["rows"].push_back(row_to_json(row));
    }
    return j;
}

ordered_json report_to_json(const ParadoxReport& report) {
    ordered_json j;
    j["interval_escapes"] = ordered_json::array();
    for (const IntervalEscape& escape : report.interval_escapes) {
        j["interval_escapes"].push_back({{"level", escape.level},
                                         {"indicator", indicator_name(escape.indicator)},
                                         {"value", escape.value},
                                         {"lower", escape.lower},
                                         {"upper", escape.upper}});
    }
    j["counterintuitive_gains"] = ordered_json::array();
    for (const CounterintuitiveGain& gain : report.counterintuitive_gains) {
        j["counterintuitive_gains"].push_back({{"u", gain.u},
                                               {"indicator", indicator_name(gain.indicator)},
                                               {"before", gain.before},
                                               {"after", gain.after}});
    }
    j["p100_cascade"] = ordered_json::array();
    for (const RankShift& shift : report.p100_cascade) {
        j["p100_cascade"].push_back(
            {{"u", shift.u}, {"before", shift.before}, {"after", shift.after}});
    }
    j["levels_created"] = report.levels_created;
    j["levels_deleted"] = report.levels_deleted;
    return j;
}

} // namespace

std::string_view format_name(TableFormat f) noexcept {
    switch (f) {
    case TableFormat::text: return "text";
    case TableFormat::csv: return "csv";
    case TableFormat::json: return "json";
    }
    return "unknown";
}

std::optional<TableFormat> parse_format(std::string_view name) noexcept {
    if (name == "text") return TableFormat::text;
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    return std::nullopt;
}

std::string format_fixed(double value, int decimals) {
    long long scale = 1;
    for (int k = 0; k < decimals; ++k) {
        scale *= 10;
    }
    const long long scaled = std::llround(value * static_cast<double>(scale));
    const bool negative = scaled < 0;
    std::string digits = std::to_string(negative ? -scaled : scaled);
    if (decimals == 0) {
        return negative ? "-" + digits : digits;
    }
    if (digits.size() <= static_cast<std::size_t>(decimals)) {
        digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
    return negative ? "-" + digits : digits;
}

std::string format_full(double value) {
    std::array<char, 32> buffer{};
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), result.ptr);
}

CitationDistribution parse_counts(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);
    std::vector<long long> counts;
    bool header_mode = false;
    bool first = true;
    for (const Line& line : lines) {
        if (first && line.text == "id,count") {
            header_mode = true;
            first = false;
            continue;
        }
        first = false;
        std::string_view token = line.text;
        if (header_mode) {
            const std::size_t comma = token.rfind(',');
            if (comma == std::string_view::npos) {
                throw ParseError(line.number, std::string(line.text));
            }
            token = token.substr(comma + 1);
        }
        const auto value = parse_int(token);
        if (!value) {
            throw ParseError(line.number, std::string(line.text));
        }
        if (*value < 0) {
            throw NegativeCount(line.number, *value, /*is_line=*/true);
        }
        counts.push_back(*value);
    }
    if (counts.empty()) {
        throw EmptyInput();
    }
    return CitationDistribution::from_counts(counts);
}

CitationDistribution parse_aggregated(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);
    if (lines.empty()) {
        throw EmptyInput();
    }
    if (lines.front().text != "u,n") {
        throw ParseError(lines.front().number, std::string(lines.front().text));
    }

    std::vector<Level> levels;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const std::size_t comma = line.text.find(',');
        if (comma == std::string_view::npos) {
            throw ParseError(line.number, std::string(line.text));
        }
        const auto u = parse_int(line.text.substr(0, comma));
        const auto n = parse_int(line.text.substr(comma + 1));
        if (!u || !n || *u < 0) {
            throw ParseError(line.number, std::string(line.text));
        }
        if (*n < 1) {
            throw NonPositiveFrequency(*u, *n);
        }
        for (const Level& seen : levels) {
            if (seen.u == *u) {
                throw DuplicateLevel(*u);
            }
        }
        levels.push_back({*u, *n});
    }
    if (levels.empty()) {
        throw EmptyInput();
    }
    return CitationDistribution::from_levels(std::move(levels));
}

std::string write_aggregated(const CitationDistribution& dist) {
    std::string out = "u,n\n";
    for (const Level& level : dist.levels()) {
        out += std::to_string(level.u) + "," + std::to_string(level.n) + "\n";
    }
    return out;
}

std::string_view input_format_name(InputFormat f) noexcept {
    return f == InputFormat::counts ? "counts" : "aggregated";
}

std::optional<InputFormat> parse_input_format(std::string_view name) noexcept {
    if (name == "counts") return InputFormat::counts;
    if (name == "aggregated") return InputFormat::aggregated;
    return std::nullopt;
}

LoadedDataset load_dataset(std::string_view text, InputFormat format, std::string source_label) {
    CitationDistribution dist =
        format == InputFormat::counts ? parse_counts(text) : parse_aggregated(text);
    // one record per paper for counts input, one per level for aggregated
    const long long records = format == InputFormat::counts
                                  ? dist.total_papers()
                                  : static_cast<long long>(dist.level_count());
    return LoadedDataset{std::move(dist), {std::move(source_label), format, records}};
}

ScenarioScript parse_scenario(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError(1, "missing scenario header");
    }

    ScenarioScript script;
    {
        const Line& header = lines.front();
        const auto words = split_words(header.text);
        if (words.empty() || words.front() != "scenario" || words.size() < 2) {
            throw ParseError(header.number, std::string(header.text));
        }
        script.name = std::string(trim(header.text.substr(words.front().size())));
    }

    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const auto words = split_words(line.text);
        const std::string_view directive = words.front();
        if (directive != "move" && directive != "add" && directive != "remove") {
            throw UnknownDirective(line.number, std::string(directive));
        }
        const std::size_t expected_args = directive == "move" ? 3 : 2;
        if (words.size() != expected_args + 1) {
            throw ParseError(line.number, std::string(line.text));
        }

        std::array<long long, 3> args{};
        for (std::size_t a = 1; a < words.size(); ++a) {
            const auto value = parse_int(words[a]);
            if (!value || *value < 0) {
                throw ParseError(line.number, std::string(line.text));
            }
            args[a - 1] = *value;
        }
        const long long count = args[0];
        if (count < 1) {
            throw ParseError(line.number, std::string(line.text));
        }
        if (directive == "move") {
            if (args[1] == args[2]) {
                throw ParseError(line.number, std::string(line.text));
            }
            script.steps.push_back(Mutation::move_papers(count, args[1], args[2]));
        } else if (directive == "add") {
            script.steps.push_back(Mutation::add_papers(count, args[1]));
        } else {
            script.steps.push_back(Mutation::remove_papers(count, args[1]));
        }
    }
    return script;
}

std::string write_table(const IndicatorTable& table, TableFormat format) {
    static constexpr std::array<const char*, 12> kColumns = {
        "u", "n", "i", "p100", "j", "p100_prime", "n_cum", "incites", "piic", "prou", "ppag", "p100_pp",
    };

    if (format == TableFormat::json) {
        return table_to_json(table).dump(2) + "\n";
    }

    std::vector<std::array<std::string, 12>> cells;
    cells.reserve(table.rows.size());
    for (const IndicatorRow& row : table.rows) {
        cells.push_back({
            std::to_string(row.u),
            std::to_string(row.n),
            std::to_string(row.i),
            format_fixed(row.p100, 1),
            std::to_string(row.j),
            format_fixed(row.p100_prime, 2),
            std::to_string(row.n_cum),
            format_fixed(row.incites, 2),
            format_fixed(row.piic, 2),
            format_fixed(row.prou, 2),
            format_fixed(row.ppag, 2),
            format_fixed(row.p100_double_prime, 2),
        });
    }

    std::string out;
    if (format == TableFormat::csv) {
        for (std::size_t c = 0; c < kColumns.size(); ++c) {
            out += kColumns[c];
            out += c + 1 < kColumns.size() ? "," : "\n";
        }
        for (const auto& row : cells) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                out += row[c];
                out += c + 1 < row.size() ? "," : "\n";
            }
        }
        return out;
    }

    // text: right-aligned fixed-width columns
    std::array<std::size_t, 12> widths{};
    for (std::size_t c = 0; c < kColumns.size(); ++c) {
        widths[c] = std::string_view(kColumns[c]).size();
        for (const auto& row : cells) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    for (std::size_t c = 0; c < kColumns.size(); ++c) {
        out += pad_left(kColumns[c], widths[c]);
        out += c + 1 < kColumns.size() ? "  " : "\n";
    }
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += pad_left(row[c], widths[c]);
            out += c + 1 < row.size() ? "  " : "\n";
        }
    }
    return out;
}

std::string write_paper_series(const IndicatorTable& table) {
    std::string out = "paper_rank,u,p100,p100_prime,piic,prou,ppag,p100_pp\n";
    long long rank = 1;
    for (const IndicatorRow& row : table.rows) {
        const std::string values = "," + std::to_string(row.u) + "," + format_full(row.p100) +
                                   "," + format_full(row.p100_prime) + "," + format_full(row.piic) +
                                   "," + format_full(row.prou) + "," + format_full(row.ppag) + "," +
                                   format_full(row.p100_double_prime) + "\n";
        for (long long copy = 0; copy < row.n; ++copy) {
            out += std::to_string(rank) + values;
            ++rank;
        }
    }
    return out;
}

std::string write_paradox_report(const ParadoxReport& report, TableFormat format) {
    if (format == TableFormat::json) {
        return report_to_json(report).dump(2) + "\n";
    }

    std::ostringstream out;
    if (report.interval_escapes.empty()) {
        out << "interval_escapes: none\n";
    } else {
        out << "interval_escapes:\n";
        for (const IntervalEscape& escape : report.interval_escapes) {
            out << "  i=" << escape.level << " " << indicator_name(escape.indicator) << " value "
                << format_fixed(escape.value, 2) << " outside [" << format_fixed(escape.lower, 2)
                << ", " << format_fixed(escape.upper, 2) << "]\n";
        }
    }
    if (report.counterintuitive_gains.empty()) {
        out << "counterintuitive_gains: none\n";
    } else {
        out << "counterintuitive_gains:\n";
        for (const CounterintuitiveGain& gain : report.counterintuitive_gains) {
            out << "  u=" << gain.u << " " << indicator_name(gain.indicator) << " "
                << format_fixed(gain.before, 2) << " -> " << format_fixed(gain.after, 2) << "\n";
        }
    }
    if (report.p100_cascade.empty()) {
        out << "p100_cascade: none\n";
    } else {
        out << "p100_cascade:\n";
        for (const RankShift& shift : report.p100_cascade) {
            out << "  u=" << shift.u << " " << format_fixed(shift.before, 1) << " -> "
                << format_fixed(shift.after, 1) << "\n";
        }
    }
    auto list_levels = [&out](const char* label, const std::vector<long long>& values) {
        out << label;
        if (values.empty()) {
            out << " none";
        } else {
            for (long long u : values) {
                out << " " << u;
            }
        }
        out << "\n";
    };
    list_levels("levels_created:", report.levels_created);
    list_levels("levels_deleted:", report.levels_deleted);
    return out.str();
}

std::string write_scenario_run(std::string_view name, std::span<const ScenarioStep> steps,
                               std::span<const ParadoxReport> reports, TableFormat format) {
    if (format == TableFormat::json) {
        ordered_json j;
        j["scenario"] = name;
        j["steps"] = ordered_json::array();
        for (std::size_t k = 0; k < steps.size(); ++k) {
            ordered_json step;
            step["index"] = steps[k].index;
            step["mutation"] =
                steps[k].mutation ? ordered_json(steps[k].mutation->describe()) : ordered_json();
            step["table"] = table_to_json(steps[k].table);
            step["report"] = k < reports.size() ? report_to_json(reports[k]) : ordered_json();
            j["steps"].push_back(std::move(step));
        }
        return j.dump(2) + "\n";
    }

    std::string out = "scenario: " + std::string(name) + "\n";
    for (std::size_t k = 0; k < steps.size(); ++k) {
        out += "-- step " + std::to_string(steps[k].index) + ": " +
               (steps[k].mutation ? steps[k].mutation->describe() : "base") + " --\n";
        out += write_table(steps[k].table, format);
        if (k < reports.size()) {
            out += write_paradox_report(reports[k], TableFormat::text);
        }
    }
    return out;
}

} // namespace bibliorank
