#pragma once

#include <stdexcept>
#include <string>

namespace pvar {

// Search space above the configured enumeration/axis cap. The CLI maps this
// to its own exit status, distinct from a failed check.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coordinate that is supposed to lie on a sample grid does not.
struct OffGridError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A RectPartition argument fails validate_partition.
struct InvalidPartitionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input file; line/col are 1-based, 0 = unknown.
struct ParseError : std::runtime_error {
    int line = 0;
    int col = 0;
    ParseError(const std::string& msg, int line_ = 0, int col_ = 0)
        : std::runtime_error(msg), line(line_), col(col_) {}
};

}  // namespace pvar
