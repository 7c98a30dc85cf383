#pragma once

#include <stdexcept>
#include <string>

namespace pinem {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid physical or numerical input parameter.
class parameter_error : public error {
public:
  using error::error;
};

/// The momentum grid does not cover the structure an operation needs.
class coverage_error : public error {
public:
  using error::error;
};

/// Requested accuracy would exceed the sample-count cap.
class resolution_error : public error {
public:
  resolution_error(const std::string& msg, std::size_t required)
      : error(msg), required_samples(required) {}
  std::size_t required_samples;
};

/// A computation guard (grid size, map resolution) was exceeded.
class cost_error : public error {
public:
  using error::error;
};

/// A 1-D search could not bracket an extremum.
class search_error : public error {
public:
  using error::error;
};

}  // namespace pinem
