#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "bibliorank/indicators.hpp"

namespace bibliorank {

enum class MutationKind { move, add, remove };

/// One edit to a citation distribution: move k papers between citation
/// values, add k papers at a value, or remove k papers from a value.
struct Mutation {
    MutationKind kind = MutationKind::move;
    long long count = 0;
    long long from_u = 0; ///< move/remove source
    long long to_u = 0;   ///< move/add target

    static Mutation move_papers(long long count, long long from_u, long long to_u);
    static Mutation add_papers(long long count, long long u);
    static Mutation remove_papers(long long count, long long u);

    /// Citation values this mutation touches; a move marks both endpoints so
    /// the merge target never shows up as a spurious "gain".
    std::vector<long long> touched_values() const;

    std::string describe() const;

    bool operator==(const Mutation&) const = default;
};

/// Applies one mutation. Levels that reach n == 0 disappear; new values are
/// inserted in sorted position. Throws UnknownLevel, InsufficientPapers or
/// EmptyResult.
CitationDistribution apply_mutation(const CitationDistribution& dist, const Mutation& m);

/// A named base distribution plus an ordered list of mutations; each step is
/// validated against the distribution produced by the preceding steps.
struct Scenario {
    std::string name;
    CitationDistribution base;
    std::vector<Mutation> steps;
};

/// Step 0 is the unmutated base; steps 1..k carry the mutation they applied.
struct ScenarioStep {
    std::size_t index = 0;
    std::optional<Mutation> mutation;
    CitationDistribution dist;
    IndicatorTable table;
};

/// Runs every step and computes its indicator table. Deterministic. Failures
/// (invalid mutation, degenerate intermediate) are rethrown as
/// ScenarioStepError carrying the failing step index.
std::vector<ScenarioStep> run_scenario(const Scenario& scenario);

/// Comparisons treat values within this distance of a bound as inside it;
/// boundary cases count as no escape and no gain.
inline constexpr double kComparisonTolerance = 1e-9;

struct IntervalEscape {
    int level = 0; ///< ascending unique-value rank i
    Indicator indicator = Indicator::p100_prime;
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

/// Levels whose indicator value lies strictly outside [PiIC, PRou] beyond
/// kComparisonTolerance, ascending in i. Recomputed from the table alone.
std::vector<IntervalEscape> detect_interval_escapes(const IndicatorTable& table, Indicator id);

struct CounterintuitiveGain {
    long long u = 0;
    Indicator indicator = Indicator::p100_prime;
    double before = 0.0;
    double after = 0.0;
};

/// P100 change at a citation value untouched by the mutation (a rank cascade
/// from level creation or deletion elsewhere).
struct RankShift {
    long long u = 0;
    double before = 0.0;
    double after = 0.0;
};

struct ParadoxReport {
    std::vector<IntervalEscape> interval_escapes;
    std::vector<CounterintuitiveGain> counterintuitive_gains;
    std::vector<RankShift> p100_cascade;
    std::vector<long long> levels_created;
    std::vector<long long> levels_deleted;

    bool empty() const noexcept;
};

/// Diffs two tables keyed by citation value u (mutations shift ranks, so rank
/// i would misalign levels). Reports, for every u present in both tables and
/// not in `mutated_values`: gains beyond tolerance on the tie-aware
/// indicators, and any P100 shift as a rank cascade. Also lists levels that
/// appeared or disappeared. Escapes are not filled in here; combine with
/// detect_interval_escapes.
ParadoxReport detect_counterintuitive(const IndicatorTable& before, const IndicatorTable& after,
                                      const std::set<long long>& mutated_values);

/// Full before/after analysis for one mutation: counterintuitive diff plus
/// interval escapes on the mutated table for the indicators that interpolate
/// inside the uncertainty interval (P100', PPaG, P100'').
ParadoxReport paradox_report(const IndicatorTable& before, const IndicatorTable& after,
                             const Mutation& applied);

/// Whether P100'' declines at one level across a series of tables.
struct LevelTrend {
    long long u = 0;
    int i = 0;
    std::vector<double> values; ///< one per table, series order
    bool non_increasing = true;
};

/// Monotonicity verdicts for the interior levels (0 < i < i_max) of a table
/// series. All tables must list identical citation values; otherwise throws
/// StructureMismatch. A single table is vacuously monotone.
std::vector<LevelTrend> p100pp_improvement_check(std::span<const IndicatorTable> tables);

} // namespace bibliorank
