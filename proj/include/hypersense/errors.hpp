#pragma once

#include <stdexcept>

namespace hypersense {

// Error taxonomy mirrors the CLI exit codes: 1 usage, 2 data/format, 3 numeric.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hypersense
