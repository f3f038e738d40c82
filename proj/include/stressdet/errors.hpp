#pragma once

#include <stdexcept>
#include <string>

namespace stressdet {

// Base for all pipeline errors. The CLI maps these to exit codes:
// input-side errors -> 2, solver non-convergence -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: missing channel, wrong column count, bad dimension.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Sensor streams have no usable common time span or mismatched grids.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// A sample timestamp falls outside every task segment.
class LabelingError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration value (cutoff beyond Nyquist, empty grid, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Iterative solver hit its iteration cap before reaching tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Degenerate training input (single class, empty dataset).
class TrainingError : public Error {
 public:
  using Error::Error;
};

// Filesystem / file-format failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace stressdet
