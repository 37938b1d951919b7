#include "bibliorank/ranks.hpp"

namespace bibliorank {

RankAssignment assign_ranks(const CitationDistribution& dist) {
    const auto& levels = dist.levels();
    RankAssignment ranks;
    ranks.levels.reserve(levels.size());
    ranks.total = dist.total_papers();
    ranks.i_max = static_cast<int>(levels.size()) - 1;
    ranks.j_max = ranks.total - levels.back().n;

    // j accumulates from the bottom, n_cum from the top.
    long long below = 0;
    for (std::size_t idx = 0; idx < levels.size(); ++idx) {
        RankedLevel level;
        level.u = levels[idx].u;
        level.n = levels[idx].n;
        level.i = static_cast<int>(idx);
        level.j = below;
        level.n_cum = ranks.total - below;
        ranks.levels.push_back(level);
        below += levels[idx].n;
    }
    return ranks;
}

} // namespace bibliorank
