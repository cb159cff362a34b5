#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace noir {

// Base class for all toolkit errors. Subclasses carry no extra state unless
// noted; catch the base to handle any domain failure uniformly.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// metric
struct ZeroTokens final : Error { using Error::Error; };
struct PowerOutOfRange final : Error { using Error::Error; };
struct NonPositiveScore final : Error { using Error::Error; };

// embedding
struct NonEmptyInput final : Error {
    explicit NonEmptyInput(const std::string& msg, std::optional<std::size_t> index = {})
        : Error(msg), input_index(index) {}
    std::optional<std::size_t> input_index;
};
struct BackendUnavailable final : Error { using Error::Error; };
struct UnknownId final : Error {
    explicit UnknownId(const std::string& msg, std::optional<std::size_t> index = {})
        : Error(msg), input_index(index) {}
    std::optional<std::size_t> input_index;
};
struct DimensionMismatch final : Error { using Error::Error; };
struct InsufficientCorpus final : Error { using Error::Error; };

// tokencount
struct EmptyText final : Error { using Error::Error; };
struct VocabLoadError final : Error { using Error::Error; };

// corpus
struct ParseError final : Error {
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
    std::size_t line_number;
};
struct DuplicateId final : Error { using Error::Error; };
struct LevelGap final : Error { using Error::Error; };

// stats
struct DegenerateSample final : Error { using Error::Error; };
struct DegenerateX final : Error { using Error::Error; };
struct MismatchedItems final : Error { using Error::Error; };
struct EmptyBin final : Error { using Error::Error; };

}  // namespace noir
