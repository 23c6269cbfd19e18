#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qb {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input bytes (JSON, CSV, timestamps).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : Error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Well-formed input whose content violates a contract (bad label, unknown unit, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

/// A data error tied to one row of a tabular or line-oriented file.
class RowError : public DataError {
 public:
  RowError(const std::string& file, std::size_t row, const std::string& message)
      : DataError(file + ":" + std::to_string(row) + ": " + message), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Failure of a document source; `retryable` is set for transient I/O problems.
class SourceError : public IoError {
 public:
  SourceError(std::string source, const std::string& message, bool retryable = true)
      : IoError(source + ": " + message), source_(std::move(source)), retryable_(retryable) {}
  const std::string& source() const noexcept { return source_; }
  bool retryable() const noexcept { return retryable_; }

 private:
  std::string source_;
  bool retryable_;
};

/// Tensor shapes that do not line up; `layer` names where it happened.
class ShapeError : public Error {
 public:
  ShapeError(std::string layer, const std::string& message)
      : Error(layer + ": " + message), layer_(std::move(layer)) {}
  const std::string& layer() const noexcept { return layer_; }

 private:
  std::string layer_;
};

/// Training produced a non-finite loss.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& model, std::int64_t step)
      : Error(model + " diverged (non-finite loss) at step " + std::to_string(step)), step_(step) {}
  std::int64_t step() const noexcept { return step_; }

 private:
  std::int64_t step_;
};

/// Power iteration hit its iteration cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// No steady sub-threshold window in a frequency series.
class UnrecoveredError : public Error {
 public:
  UnrecoveredError(const std::string& factor, std::int64_t last_day)
      : Error("factor '" + factor + "' has not recovered by day " + std::to_string(last_day)),
        last_day_(last_day) {}
  std::int64_t last_observed_day() const noexcept { return last_day_; }

 private:
  std::int64_t last_day_;
};

}  // namespace qb
