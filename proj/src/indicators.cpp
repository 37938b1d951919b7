#include "bibliorank/indicators.hpp"

#include <algorithm>

namespace bibliorank {

namespace {

void require_rank_scale(const RankAssignment& ranks, const char* indicators) {
    if (ranks.degenerate()) {
        throw DegenerateDistribution("cannot compute " + std::string(indicators));
    }
}

} // namespace

std::string_view indicator_name(Indicator id) noexcept {
    switch (id) {
    case Indicator::p100: return "p100";
    case Indicator::p100_prime: return "p100_prime";
    case Indicator::incites: return "incites";
    case Indicator::piic: return "piic";
    case Indicator::prou: return "prou";
    case Indicator::ppag: return "ppag";
    case Indicator::p100_double_prime: return "p100_double_prime";
    }
    return "unknown";
}

std::optional<Indicator> parse_indicator(std::string_view name) noexcept {
    for (Indicator id : kAllIndicators) {
        if (name == indicator_name(id)) {
            return id;
        }
    }
    // csv column alias for the double-prime scale
    if (name == "p100_pp") {
        return Indicator::p100_double_prime;
    }
    return std::nullopt;
}

std::vector<double> p100(const RankAssignment& ranks) {
    require_rank_scale(ranks, "p100");
    std::vector<double> values;
    values.reserve(ranks.levels.size());
    for (const RankedLevel& level : ranks.levels) {
        values.push_back(100.0 * level.i / ranks.i_max);
    }
    return values;
}

std::vector<double> p100_prime(const RankAssignment& ranks) {
    require_rank_scale(ranks, "p100_prime");
    std::vector<double> values;
    values.reserve(ranks.levels.size());
    for (const RankedLevel& level : ranks.levels) {
        values.push_back(100.0 * static_cast<double>(level.j) / static_cast<double>(ranks.j_max));
    }
    return values;
}

std::vector<PiicIncites> piic_and_incites(const RankAssignment& ranks) {
    std::vector<PiicIncites> values;
    values.reserve(ranks.levels.size());
    const auto total = static_cast<double>(ranks.total);
    for (const RankedLevel& level : ranks.levels) {
        const double inverted = 100.0 * static_cast<double>(level.j) / total;
        values.push_back({inverted, 100.0 - inverted});
    }
    return values;
}

std::vector<double> prou(const RankAssignment& ranks) {
    std::vector<double> values;
    values.reserve(ranks.levels.size());
    const auto total = static_cast<double>(ranks.total);
    for (const RankedLevel& level : ranks.levels) {
        values.push_back(100.0 * static_cast<double>(level.j + level.n) / total);
    }
    return values;
}

std::vector<double> ppag(const RankAssignment& ranks) {
    std::vector<double> values;
    values.reserve(ranks.levels.size());
    const auto total = static_cast<double>(ranks.total);
    for (const RankedLevel& level : ranks.levels) {
        // average percentile of the n tied papers: (j + (n+1)/2) / N
        values.push_back(100.0 * (static_cast<double>(level.j) + 0.5 * static_cast<double>(level.n + 1)) / total);
    }
    return values;
}

std::vector<UncertaintyInterval> intervals(const RankAssignment& ranks) {
    std::vector<UncertaintyInterval> values;
    values.reserve(ranks.levels.size());
    const auto total = static_cast<double>(ranks.total);
    for (const RankedLevel& level : ranks.levels) {
        UncertaintyInterval interval;
        interval.lower = 100.0 * static_cast<double>(level.j) / total;
        interval.upper = 100.0 * static_cast<double>(level.j + level.n) / total;
        interval.midpoint = 100.0 * (static_cast<double>(level.j) + 0.5 * static_cast<double>(level.n)) / total;
        values.push_back(interval);
    }
    return values;
}

std::vector<double> p100_double_prime(const RankAssignment& ranks) {
    require_rank_scale(ranks, "p100_double_prime");
    std::vector<double> values;
    values.reserve(ranks.levels.size());
    const auto total = static_cast<double>(ranks.total);
    for (const RankedLevel& level : ranks.levels) {
        // 100*(j + n*(i/i_max))/N; keeping the sum inside one division pins
        // the endpoints to exactly 0 and 100 and the value inside the
        // uncertainty interval.
        const double fraction = static_cast<double>(level.i) / ranks.i_max;
        values.push_back(100.0 * (static_cast<double>(level.j) + static_cast<double>(level.n) * fraction) / total);
    }
    return values;
}

double IndicatorRow::value(Indicator id) const noexcept {
    switch (id) {
    case Indicator::p100: return p100;
    case Indicator::p100_prime: return p100_prime;
    case Indicator::incites: return incites;
    case Indicator::piic: return piic;
    case Indicator::prou: return prou;
    case Indicator::ppag: return ppag;
    case Indicator::p100_double_prime: return p100_double_prime;
    }
    return 0.0;
}

std::optional<std::size_t> IndicatorTable::row_of(long long u) const noexcept {
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        if (rows[idx].u == u) {
            return idx;
        }
    }
    return std::nullopt;
}

IndicatorTable indicator_table(const CitationDistribution& dist, std::string provenance) {
    const RankAssignment ranks = assign_ranks(dist);
    require_rank_scale(ranks, "p100, p100_prime, p100_double_prime");

    const std::vector<double> v_p100 = p100(ranks);
    const std::vector<double> v_p100p = p100_prime(ranks);
    const std::vector<PiicIncites> v_piic = piic_and_incites(ranks);
    const std::vector<double> v_prou = prou(ranks);
    const std::vector<double> v_ppag = ppag(ranks);
    const std::vector<double> v_p100pp = p100_double_prime(ranks);

    IndicatorTable table;
    table.provenance = std::move(provenance);
    table.rows.reserve(ranks.levels.size());
    // Table rows run from the most cited level down.
    for (std::size_t k = ranks.levels.size(); k-- > 0;) {
        const RankedLevel& level = ranks.levels[k];
        IndicatorRow row;
        row.u = level.u;
        row.n = level.n;
        row.i = level.i;
        row.j = level.j;
        row.n_cum = level.n_cum;
        row.p100 = v_p100[k];
        row.p100_prime = v_p100p[k];
        row.piic = v_piic[k].piic;
        row.incites = v_piic[k].incites;
        row.prou = v_prou[k];
        row.ppag = v_ppag[k];
        row.p100_double_prime = v_p100pp[k];
        table.rows.push_back(row);
    }
    return table;
}

std::map<Indicator, MeanPair> indicator_means(const IndicatorTable& table) {
    std::map<Indicator, MeanPair> means;
    long long papers = 0;
    for (const IndicatorRow& row : table.rows) {
        papers += row.n;
    }
    for (Indicator id : kAllIndicators) {
        double level_sum = 0.0;
        double weighted_sum = 0.0;
        for (const IndicatorRow& row : table.rows) {
            level_sum += row.value(id);
            weighted_sum += static_cast<double>(row.n) * row.value(id);
        }
        means[id] = {level_sum / static_cast<double>(table.rows.size()),
                     weighted_sum / static_cast<double>(papers)};
    }
    return means;
}

std::optional<ClassMatch> class_report(const CitationDistribution& dist, Indicator id,
                                       double threshold) {
    const RankAssignment ranks = assign_ranks(dist);

    std::vector<double> values(ranks.levels.size());
    switch (id) {
    case Indicator::p100: values = p100(ranks); break;
    case Indicator::p100_prime: values = p100_prime(ranks); break;
    case Indicator::p100_double_prime: values = p100_double_prime(ranks); break;
    case Indicator::prou: values = prou(ranks); break;
    case Indicator::ppag: values = ppag(ranks); break;
    case Indicator::incites:
    case Indicator::piic: {
        const auto pairs = piic_and_incites(ranks);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            values[k] = id == Indicator::piic ? pairs[k].piic : pairs[k].incites;
        }
        break;
    }
    }

    for (std::size_t k = 0; k < ranks.levels.size(); ++k) {
        if (values[k] >= threshold) {
            return ClassMatch{ranks.levels[k].u, ranks.levels[k].n_cum};
        }
    }
    return std::nullopt;
}

} // namespace bibliorank
