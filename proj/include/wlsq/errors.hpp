// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wlsq {

// Invalid parameters or a regime violation. The CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Non-finite values, failed decompositions. Exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SimulationError : public NumericalError {
 public:
  SimulationError(std::size_t replicate, const std::string& what)
      : NumericalError("replicate " + std::to_string(replicate) + ": " + what),
        replicate_(replicate) {}

  std::size_t replicate() const noexcept { return replicate_; }

 private:
  std::size_t replicate_;
};

}  // namespace wlsq
