#pragma once

#include <stdexcept>
#include <string>

namespace epclose {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input file or schema problems detected while loading datasets.
struct IngestError : Error {
  using Error::Error;
};

// A pattern was queried against a dataset that contains it nowhere.
struct NoSupportError : Error {
  using Error::Error;
};

// Labeling or consistency problems during pattern quality evaluation.
struct EvalError : Error {
  using Error::Error;
};

// The engine and the baseline disagreed on a benchmark run.
struct MismatchError : Error {
  using Error::Error;
};

}  // namespace epclose
