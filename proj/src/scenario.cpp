#include "bibliorank/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace bibliorank {

namespace {

void require_valid_count(long long count) {
    if (count < 1) {
        throw Error("mutation count must be positive, got " + std::to_string(count));
    }
}

void require_valid_value(long long u) {
    if (u < 0) {
        throw Error("citation value must be non-negative, got " + std::to_string(u));
    }
}

} // namespace

Mutation Mutation::move_papers(long long count, long long from_u, long long to_u) {
    require_valid_count(count);
    require_valid_value(from_u);
    require_valid_value(to_u);
    if (from_u == to_u) {
        throw Error("move source and target must differ, both are " + std::to_string(from_u));
    }
    return Mutation{MutationKind::move, count, from_u, to_u};
}

Mutation Mutation::add_papers(long long count, long long u) {
    require_valid_count(count);
    require_valid_value(u);
    return Mutation{MutationKind::add, count, 0, u};
}

Mutation Mutation::remove_papers(long long count, long long u) {
    require_valid_count(count);
    require_valid_value(u);
    return Mutation{MutationKind::remove, count, u, 0};
}

std::vector<long long> Mutation::touched_values() const {
    switch (kind) {
    case MutationKind::move: return {from_u, to_u};
    case MutationKind::add: return {to_u};
    case MutationKind::remove: return {from_u};
    }
    return {};
}

std::string Mutation::describe() const {
    switch (kind) {
    case MutationKind::move:
        return "move " + std::to_string(count) + " " + std::to_string(from_u) + " " +
               std::to_string(to_u);
    case MutationKind::add:
        return "add " + std::to_string(count) + " " + std::to_string(to_u);
    case MutationKind::remove:
        return "remove " + std::to_string(count) + " " + std::to_string(from_u);
    }
    return {};
}

CitationDistribution apply_mutation(const CitationDistribution& dist, const Mutation& m) {
    std::vector<Level> levels = dist.levels();

    auto take_from = [&](long long u, long long k) {
        const auto idx = dist.index_of(u);
        if (!idx) {
            throw UnknownLevel(u);
        }
        if (levels[*idx].n < k) {
            throw InsufficientPapers(u, k, levels[*idx].n);
        }
        levels[*idx].n -= k;
    };
    auto give_to = [&](long long u, long long k) {
        auto it = std::find_if(levels.begin(), levels.end(),
                               [u](const Level& level) { return level.u == u; });
        if (it != levels.end()) {
            it->n += k;
        } else {
            levels.push_back({u, k});
        }
    };

    switch (m.kind) {
    case MutationKind::move:
        take_from(m.from_u, m.count);
        give_to(m.to_u, m.count);
        break;
    case MutationKind::add:
        give_to(m.to_u, m.count);
        break;
    case MutationKind::remove:
        take_from(m.from_u, m.count);
        break;
    }

    std::erase_if(levels, [](const Level& level) { return level.n == 0; });
    if (levels.empty()) {
        throw EmptyResult();
    }
    return CitationDistribution::from_levels(std::move(levels));
}

std::vector<ScenarioStep> run_scenario(const Scenario& scenario) {
    std::vector<ScenarioStep> steps;
    steps.reserve(scenario.steps.size() + 1);

    CitationDistribution current = scenario.base;
    for (std::size_t index = 0; index <= scenario.steps.size(); ++index) {
        try {
            std::optional<Mutation> mutation;
            if (index > 0) {
                mutation = scenario.steps[index - 1];
                current = apply_mutation(current, *mutation);
            }
            IndicatorTable table = indicator_table(current, scenario.name);
            steps.push_back(ScenarioStep{index, std::move(mutation), current, std::move(table)});
        } catch (const Error& e) {
            throw ScenarioStepError(index, e.what());
        }
    }
    return steps;
}

std::vector<IntervalEscape> detect_interval_escapes(const IndicatorTable& table, Indicator id) {
    std::vector<IntervalEscape> escapes;
    for (const IndicatorRow& row : table.rows) {
        const double value = row.value(id);
        if (value < row.piic - kComparisonTolerance || value > row.prou + kComparisonTolerance) {
            escapes.push_back({row.i, id, value, row.piic, row.prou});
        }
    }
    std::sort(escapes.begin(), escapes.end(),
              [](const IntervalEscape& a, const IntervalEscape& b) { return a.level < b.level; });
    return escapes;
}

bool ParadoxReport::empty() const noexcept {
    return interval_escapes.empty() && counterintuitive_gains.empty() && p100_cascade.empty() &&
           levels_created.empty() && levels_deleted.empty();
}

ParadoxReport detect_counterintuitive(const IndicatorTable& before, const IndicatorTable& after,
                                      const std::set<long long>& mutated_values) {
    // Gains are meaningful for the tie-aware scales; P100 changes at
    // untouched values are reported separately as rank cascades.
    static constexpr std::array<Indicator, 5> kGainIndicators = {
        Indicator::p100_prime, Indicator::piic, Indicator::prou, Indicator::ppag,
        Indicator::p100_double_prime,
    };

    ParadoxReport report;
    for (const IndicatorRow& row : before.rows) {
        if (!after.row_of(row.u)) {
            report.levels_deleted.push_back(row.u);
        }
    }
    for (const IndicatorRow& row : after.rows) {
        if (!before.row_of(row.u)) {
            report.levels_created.push_back(row.u);
        }
    }
    std::sort(report.levels_deleted.begin(), report.levels_deleted.end());
    std::sort(report.levels_created.begin(), report.levels_created.end());

    // Walk ascending u for a deterministic report order.
    for (std::size_t k = before.rows.size(); k-- > 0;) {
        const IndicatorRow& old_row = before.rows[k];
        if (mutated_values.contains(old_row.u)) {
            continue;
        }
        const auto new_idx = after.row_of(old_row.u);
        if (!new_idx) {
            continue;
        }
        const IndicatorRow& new_row = after.rows[*new_idx];
        for (Indicator id : kGainIndicators) {
            if (new_row.value(id) > old_row.value(id) + kComparisonTolerance) {
                report.counterintuitive_gains.push_back(
                    {old_row.u, id, old_row.value(id), new_row.value(id)});
            }
        }
        if (std::abs(new_row.p100 - old_row.p100) > kComparisonTolerance) {
            report.p100_cascade.push_back({old_row.u, old_row.p100, new_row.p100});
        }
    }
    return report;
}

ParadoxReport paradox_report(const IndicatorTable& before, const IndicatorTable& after,
                             const Mutation& applied) {
    const auto touched = applied.touched_values();
    ParadoxReport report =
        detect_counterintuitive(before, after, {touched.begin(), touched.end()});
    for (Indicator id : {Indicator::p100_prime, Indicator::ppag, Indicator::p100_double_prime}) {
        auto escapes = detect_interval_escapes(after, id);
        report.interval_escapes.insert(report.interval_escapes.end(), escapes.begin(),
                                       escapes.end());
    }
    std::sort(report.interval_escapes.begin(), report.interval_escapes.end(),
              [](const IntervalEscape& a, const IntervalEscape& b) { return a.level < b.level; });
    return report;
}

std::vector<LevelTrend> p100pp_improvement_check(std::span<const IndicatorTable> tables) {
    std::vector<LevelTrend> trends;
    if (tables.empty()) {
        return trends;
    }

    const IndicatorTable& first = tables.front();
    for (const IndicatorTable& table : tables.subspan(1)) {
        if (table.rows.size() != first.rows.size()) {
            throw StructureMismatch(std::to_string(table.rows.size()) + " vs " +
                                    std::to_string(first.rows.size()) + " levels");
        }
        for (std::size_t k = 0; k < first.rows.size(); ++k) {
            if (table.rows[k].u != first.rows[k].u) {
                throw StructureMismatch("level " + std::to_string(first.rows[k].u) +
                                        " vs " + std::to_string(table.rows[k].u));
            }
        }
    }

    // Interior levels only; the endpoints are pinned to 0 and 100.
    for (std::size_t k = 0; k < first.rows.size(); ++k) {
        const IndicatorRow& row = first.rows[k];
        if (row.i == 0 || row.u == first.rows.front().u) {
            continue;
        }
        LevelTrend trend;
        trend.u = row.u;
        trend.i = row.i;
        for (const IndicatorTable& table : tables) {
            trend.values.push_back(table.rows[k].p100_double_prime);
        }
        for (std::size_t t = 1; t < trend.values.size(); ++t) {
            if (trend.values[t] > trend.values[t - 1] + kComparisonTolerance) {
                trend.non_increasing = false;
                break;
            }
        }
        trends.push_back(std::move(trend));
    }
    std::reverse(trends.begin(), trends.end()); // ascending i
    return trends;
}

} // namespace bibliorank
