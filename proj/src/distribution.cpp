#include "bibliorank/distribution.hpp"

#include <algorithm>

namespace bibliorank {

CitationDistribution::CitationDistribution(std::vector<Level> levels)
    : levels_(std::move(levels)) {
    for (const Level& level : levels_) {
        total_ += level.n;
    }
}

CitationDistribution CitationDistribution::from_counts(std::span<const long long> counts) {
    if (counts.empty()) {
        throw EmptyInput();
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0) {
            throw NegativeCount(i, counts[i], /*is_line=*/false);
        }
    }

    std::vector<long long> sorted(counts.begin(), counts.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<Level> levels;
    for (long long c : sorted) {
        if (!levels.empty() && levels.back().u == c) {
            ++levels.back().n;
        } else {
            levels.push_back({c, 1});
        }
    }
    return CitationDistribution(std::move(levels));
}

CitationDistribution CitationDistribution::from_levels(std::vector<Level> levels) {
    if (levels.empty()) {
        throw EmptyInput();
    }
    std::sort(levels.begin(), levels.end(),
              [](const Level& a, const Level& b) { return a.u < b.u; });
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i].u < 0) {
            throw NegativeCount(i, levels[i].u, /*is_line=*/false);
        }
        if (levels[i].n < 1) {
            throw NonPositiveFrequency(levels[i].u, levels[i].n);
        }
        if (i > 0 && levels[i].u == levels[i - 1].u) {
            throw DuplicateLevel(levels[i].u);
        }
    }
    return CitationDistribution(std::move(levels));
}

long long CitationDistribution::total_citations() const noexcept {
    long long sum = 0;
    for (const Level& level : levels_) {
        sum += level.u * level.n;
    }
    return sum;
}

std::vector<long long> CitationDistribution::expand() const {
    std::vector<long long> counts;
    counts.reserve(static_cast<std::size_t>(total_));
    for (const Level& level : levels_) {
        counts.insert(counts.end(), static_cast<std::size_t>(level.n), level.u);
    }
    return counts;
}

std::optional<std::size_t> CitationDistribution::index_of(long long u) const noexcept {
    auto it = std::lower_bound(levels_.begin(), levels_.end(), u,
                               [](const Level& level, long long value) { return level.u < value; });
    if (it == levels_.end() || it->u != u) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - levels_.begin());
}

CitationDistribution build_distribution(std::initializer_list<long long> counts) {
    return CitationDistribution::from_counts(std::span<const long long>(counts.begin(), counts.size()));
}

} // namespace bibliorank
