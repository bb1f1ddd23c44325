#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dtwmerge {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidSeries : public Error {
public:
  using Error::Error;
};

class InvalidDataset : public Error {
public:
  using Error::Error;
};

class InvalidInput : public Error {
public:
  using Error::Error;
};

class InvalidIndex : public Error {
public:
  using Error::Error;
};

class OracleTooLarge : public Error {
public:
  using Error::Error;
};

class BandInfeasible : public Error {
public:
  using Error::Error;
};

class FileNotFound : public Error {
public:
  using Error::Error;
};

// Parse failure with 1-based row/column of the offending field.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t row, std::size_t column)
      : Error(what + " (row " + std::to_string(row) + ", column " +
              std::to_string(column) + ")"),
        row_(row),
        column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t row_;
  std::size_t column_;
};

class MissingValueUnsupported : public Error {
public:
  using Error::Error;
};

class EmptySeries : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

class DatasetMismatch : public Error {
public:
  using Error::Error;
};

}  // namespace dtwmerge
