#ifndef MOODCO_ERRORS_HPP
#define MOODCO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace moodco {

// Bad configuration: missing files, malformed config keys, unresolved
// category bindings. CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Bad or degenerate data: malformed corpus/lexicon records, referential
// integrity violations, statistics that cannot be computed. Exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Statistics degenerate on this input (zero variance, empty group, ...).
class DegenerateDataError : public DataError {
public:
    explicit DegenerateDataError(const std::string& what) : DataError(what) {}
};

}  // namespace moodco

#endif  // MOODCO_ERRORS_HPP
