#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bibliorank/errors.hpp"

namespace bibliorank {

/// One unique citation value u together with the number of papers n tied at it.
struct Level {
    long long u = 0;
    long long n = 0;

    bool operator==(const Level&) const = default;
};

/// The reference set, reduced to its unique citation values.
///
/// Levels are kept strictly ascending in u with every frequency >= 1, so a
/// constructed instance always satisfies the class invariants. Expanding each
/// level to n copies of u and re-aggregating reproduces the same value.
class CitationDistribution {
public:
    /// Aggregates raw per-paper citation counts. Throws EmptyInput or
    /// NegativeCount (with the offending 0-based index).
    static CitationDistribution from_counts(std::span<const long long> counts);

    /// Builds from (u, n) pairs in any order. Throws EmptyInput,
    /// NegativeCount, NonPositiveFrequency or DuplicateLevel.
    static CitationDistribution from_levels(std::vector<Level> levels);

    const std::vector<Level>& levels() const noexcept { return levels_; }
    std::size_t level_count() const noexcept { return levels_.size(); }

    /// Total number of papers N.
    long long total_papers() const noexcept { return total_; }

    /// Sum of u*n over all levels.
    long long total_citations() const noexcept;

    /// Per-paper citation counts, ascending. Inverse of from_counts.
    std::vector<long long> expand() const;

    /// Position of the level with citation value u, if present.
    std::optional<std::size_t> index_of(long long u) const noexcept;

    bool operator==(const CitationDistribution&) const = default;

private:
    explicit CitationDistribution(std::vector<Level> levels);

    std::vector<Level> levels_;
    long long total_ = 0;
};

/// Convenience overload for literal data in tests and tools.
CitationDistribution build_distribution(std::initializer_list<long long> counts);

} // namespace bibliorank
