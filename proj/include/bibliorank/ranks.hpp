#pragma once

#include <vector>

#include "bibliorank/distribution.hpp"

namespace bibliorank {

/// One citation level with its rank bookkeeping:
///   i      ascending unique-value rank (0-based),
///   j      papers with strictly fewer citations,
///   n_cum  papers with u or more citations (cumulated from the top).
struct RankedLevel {
    long long u = 0;
    long long n = 0;
    int i = 0;
    long long j = 0;
    long long n_cum = 0;

    bool operator==(const RankedLevel&) const = default;
};

/// Ranks for a whole distribution, levels ascending in u.
/// Satisfies j + n_cum == total at every level and j_max == total - n(top).
struct RankAssignment {
    std::vector<RankedLevel> levels;
    int i_max = 0;
    long long j_max = 0;
    long long total = 0;

    bool degenerate() const noexcept { return i_max == 0; }
};

RankAssignment assign_ranks(const CitationDistribution& dist);

} // namespace bibliorank
