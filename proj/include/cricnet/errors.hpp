#pragma once

#include <stdexcept>
#include <string>

namespace cricnet {

// Root of the library's error hierarchy. The three intermediate bases map
// onto the CLI exit codes: DataError -> 1, FitError -> 2, ConfigError -> 3.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DataError : public Error {
  public:
    using Error::Error;
};

class FitError : public Error {
  public:
    using Error::Error;
};

class ConfigError : public Error {
  public:
    using Error::Error;
};

// --- ingest ---
class SchemaError : public DataError {
  public:
    using DataError::DataError;
};

class InvariantError : public DataError {
  public:
    using DataError::DataError;
};

class DuplicateIdError : public DataError {
  public:
    using DataError::DataError;
};

class FormatError : public DataError {
  public:
    using DataError::DataError;
};

class DuplicateKeyError : public DataError {
  public:
    using DataError::DataError;
};

class RangeError : public DataError {
  public:
    using DataError::DataError;
};

// --- graph ---
class EmptyInningsError : public DataError {
  public:
    using DataError::DataError;
};

class UnsupportedFormatError : public DataError {
  public:
    using DataError::DataError;
};

// --- centrality ---
class DisconnectedError : public DataError {
  public:
    using DataError::DataError;
};

class TooSmallError : public DataError {
  public:
    using DataError::DataError;
};

// --- leadership ---
class CaptainAbsentError : public DataError {
  public:
    using DataError::DataError;
};

class EmptyListError : public DataError {
  public:
    using DataError::DataError;
};

class ZeroMeanError : public DataError {
  public:
    using DataError::DataError;
};

// --- stats ---
class DegenerateError : public FitError {
  public:
    using FitError::FitError;
};

class SeparationError : public FitError {
  public:
    using FitError::FitError;
};

class NonConvergenceError : public FitError {
  public:
    using FitError::FitError;
};

class RankError : public FitError {
  public:
    using FitError::FitError;
};

class ZeroVarianceError : public FitError {
  public:
    using FitError::FitError;
};

class PerfectCollinearityError : public FitError {
  public:
    using FitError::FitError;
};

class NestingError : public FitError {
  public:
    using FitError::FitError;
};

}  // namespace cricnet
