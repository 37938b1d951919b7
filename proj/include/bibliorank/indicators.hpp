#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bibliorank/ranks.hpp"

namespace bibliorank {

/// The six percentile indicators plus the raw (non-inverted) InCites scale.
enum class Indicator {
    p100,
    p100_prime,
    incites,
    piic,
    prou,
    ppag,
    p100_double_prime,
};

inline constexpr std::array<Indicator, 7> kAllIndicators = {
    Indicator::p100,    Indicator::p100_prime, Indicator::incites, Indicator::piic,
    Indicator::prou,    Indicator::ppag,       Indicator::p100_double_prime,
};

std::string_view indicator_name(Indicator id) noexcept;
std::optional<Indicator> parse_indicator(std::string_view name) noexcept;

/// Percentile scale over unique citation values only: 100*i/i_max.
/// Throws DegenerateDistribution when i_max == 0.
std::vector<double> p100(const RankAssignment& ranks);

/// Percentile scale over papers-below ranks: 100*j/j_max.
/// Throws DegenerateDistribution when j_max == 0.
std::vector<double> p100_prime(const RankAssignment& ranks);

struct PiicIncites {
    double piic = 0.0;    ///< 100*j/N, papers with strictly fewer citations
    double incites = 0.0; ///< 100*n_cum/N; piic + incites == 100 exactly
};

/// Inverted InCites percentile and its non-inverted companion. Computable on
/// any valid distribution, including single-level ones.
std::vector<PiicIncites> piic_and_incites(const RankAssignment& ranks);

/// Rousseau rule: tied papers take the largest percentile, 100*(j+n)/N.
/// Top level is exactly 100; the lowest value is strictly positive.
std::vector<double> prou(const RankAssignment& ranks);

/// Pudovkin-Garfield rule: tied papers take the average of their individual
/// percentiles, 100*(j + (n+1)/2)/N.
std::vector<double> ppag(const RankAssignment& ranks);

/// Per-level uncertainty interval [PiIC, PRou]; width is 100*n/N.
struct UncertaintyInterval {
    double lower = 0.0;
    double upper = 0.0;
    double midpoint = 0.0;

    double width() const noexcept { return upper - lower; }
};

std::vector<UncertaintyInterval> intervals(const RankAssignment& ranks);

/// Interpolation between the interval bounds driven by P100:
/// 100*(j + n*(i/i_max))/N. Inside [PiIC, PRou] by construction, anchored at
/// 0 and 100. Throws DegenerateDistribution when i_max == 0.
std::vector<double> p100_double_prime(const RankAssignment& ranks);

/// One table row; the field order mirrors the CSV column contract.
struct IndicatorRow {
    long long u = 0;
    long long n = 0;
    int i = 0;
    double p100 = 0.0;
    long long j = 0;
    double p100_prime = 0.0;
    long long n_cum = 0;
    double incites = 0.0;
    double piic = 0.0;
    double prou = 0.0;
    double ppag = 0.0;
    double p100_double_prime = 0.0;

    double value(Indicator id) const noexcept;
};

/// All indicators for one distribution, rows in descending u.
struct IndicatorTable {
    std::vector<IndicatorRow> rows;
    std::string provenance;

    std::optional<std::size_t> row_of(long long u) const noexcept;
};

/// Computes every column at full precision; display rounding happens only at
/// serialization. Throws DegenerateDistribution when i_max == 0.
IndicatorTable indicator_table(const CitationDistribution& dist, std::string provenance = {});

struct MeanPair {
    double level_mean = 0.0;          ///< one value per unique citation level
    double paper_weighted_mean = 0.0; ///< levels weighted by their frequency n
};

std::map<Indicator, MeanPair> indicator_means(const IndicatorTable& table);

struct ClassMatch {
    long long min_citations = 0; ///< smallest u whose indicator value >= threshold
    long long paper_count = 0;   ///< papers with that many or more citations
};

/// Smallest citation count reaching `threshold` on the chosen indicator
/// (closed boundary: value == threshold qualifies). Empty when no level
/// qualifies. Throws DegenerateDistribution if the indicator needs i_max >= 1.
std::optional<ClassMatch> class_report(const CitationDistribution& dist, Indicator id,
                                       double threshold);

} // namespace bibliorank
