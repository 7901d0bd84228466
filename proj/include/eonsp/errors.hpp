#ifndef EONSP_ERRORS_HPP
#define EONSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eonsp {

// Allocation asked for units that are not all free on the target set.
struct WindowNotContained : std::logic_error {
    explicit WindowNotContained(const std::string& what) : std::logic_error(what) {}
};

// Generator input too small to form a graph.
struct DegenerateInput : std::invalid_argument {
    explicit DegenerateInput(const std::string& what) : std::invalid_argument(what) {}
};

// Some vertex pair is unreachable.
struct Disconnected : std::runtime_error {
    explicit Disconnected(const std::string& what) : std::runtime_error(what) {}
};

// Topology or CSV file rejected; message carries line/field diagnostics.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid simulation configuration.
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// A call index is missing one of the two algorithm tags.
struct UnmatchedRecords : std::runtime_error {
    explicit UnmatchedRecords(const std::string& what) : std::runtime_error(what) {}
};

// Too few distinct x-values to fit growth models.
struct InsufficientSpread : std::runtime_error {
    explicit InsufficientSpread(const std::string& what) : std::runtime_error(what) {}
};

} // namespace eonsp

#endif
