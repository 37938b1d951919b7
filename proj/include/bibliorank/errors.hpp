#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bibliorank {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A dataset with no records at all.
class EmptyInput final : public Error {
public:
    EmptyInput() : Error("empty input: no citation counts") {}
};

/// A citation count below zero. `position` is the 0-based input index for
/// in-memory data and the 1-based line number for parsed text.
class NegativeCount final : public Error {
public:
    NegativeCount(std::size_t position, long long value, bool is_line)
        : Error((is_line ? "line " : "index ") + std::to_string(position) +
                ": negative citation count " + std::to_string(value)),
          position(position), value(value) {}

    std::size_t position;
    long long value;
};

/// Raised by the rank-scale indicators (P100, P100', P100'') when the
/// distribution has a single unique citation value, so i_max = j_max = 0.
class DegenerateDistribution final : public Error {
public:
    explicit DegenerateDistribution(const std::string& detail)
        : Error("degenerate distribution (one unique citation value): " + detail) {}
};

/// A mutation names a citation value that has no level in the distribution.
class UnknownLevel final : public Error {
public:
    explicit UnknownLevel(long long u)
        : Error("no level with citation count " + std::to_string(u)), u(u) {}

    long long u;
};

/// A mutation asks for more papers than the source level holds.
class InsufficientPapers final : public Error {
public:
    InsufficientPapers(long long u, long long requested, long long available)
        : Error("level " + std::to_string(u) + " holds " + std::to_string(available) +
                " paper(s), cannot take " + std::to_string(requested)),
          u(u), requested(requested), available(available) {}

    long long u;
    long long requested;
    long long available;
};

/// A mutation would leave the distribution without any papers.
class EmptyResult final : public Error {
public:
    EmptyResult() : Error("mutation would remove the last paper") {}
};

/// Unparsable line in a dataset or scenario file.
class ParseError final : public Error {
public:
    ParseError(std::size_t line, std::string content)
        : Error("line " + std::to_string(line) + ": cannot parse \"" + content + "\""),
          line(line), content(std::move(content)) {}

    std::size_t line;
    std::string content;
};

/// The same unique citation value appears twice in an aggregated dataset.
class DuplicateLevel final : public Error {
public:
    explicit DuplicateLevel(long long u)
        : Error("duplicate citation level " + std::to_string(u)), u(u) {}

    long long u;
};

/// An aggregated record with frequency < 1.
class NonPositiveFrequency final : public Error {
public:
    NonPositiveFrequency(long long u, long long n)
        : Error("level " + std::to_string(u) + ": frequency must be positive, got " +
                std::to_string(n)),
          u(u), n(n) {}

    long long u;
    long long n;
};

/// A scenario step whose directive word is not move/add/remove.
class UnknownDirective final : public Error {
public:
    UnknownDirective(std::size_t line, std::string directive)
        : Error("line " + std::to_string(line) + ": unknown directive \"" + directive + "\""),
          line(line), directive(std::move(directive)) {}

    std::size_t line;
    std::string directive;
};

/// Indicator tables compared across a series do not share the same levels.
class StructureMismatch final : public Error {
public:
    explicit StructureMismatch(const std::string& detail)
        : Error("tables do not share the same citation levels: " + detail) {}
};

/// Wraps the failure of one scenario step with its index (0 = base table).
class ScenarioStepError final : public Error {
public:
    ScenarioStepError(std::size_t step_index, const std::string& cause)
        : Error("step " + std::to_string(step_index) + ": " + cause),
          step_index(step_index) {}

    std::size_t step_index;
};

} // namespace bibliorank
