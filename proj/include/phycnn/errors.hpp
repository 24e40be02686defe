#pragma once

#include <stdexcept>
#include <string>

namespace phycnn {

/// Invalid or inconsistent configuration values.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Tensor/sequence dimensions do not match what an operation requires.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input values outside an operation's mathematical domain.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File and serialization failures.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure during time integration; carries the failing step.
struct SimulationError : std::runtime_error {
  SimulationError(const std::string& msg, std::size_t step)
      : std::runtime_error(msg + " at step " + std::to_string(step)), step(step) {}
  std::size_t step;
};

/// Non-finite loss or gradient during training; carries the epoch.
struct TrainingError : std::runtime_error {
  TrainingError(const std::string& msg, std::size_t epoch)
      : std::runtime_error(msg + " at epoch " + std::to_string(epoch)), epoch(epoch) {}
  std::size_t epoch;
};

/// Non-finite gradients handed to the optimizer.
struct OptimizerError : std::runtime_error {
  explicit OptimizerError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Degenerate inputs to an evaluation metric (e.g. zero variance).
struct MetricError : std::runtime_error {
  explicit MetricError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Fragility fit failures: non-identifiable data or non-convergence.
struct FitError : std::runtime_error {
  explicit FitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Dataset partition failures.
struct PartitionError : std::runtime_error {
  explicit PartitionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace phycnn
