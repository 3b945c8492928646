/// @file errors.hpp
/// @brief Exception types shared by every module of the solver library.
///
/// Configuration problems, invalid physical states and solver divergence
/// are reported with distinct types so the CLI can map them onto exit codes.

#pragma once

#include <stdexcept>
#include <string>

namespace weno {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user input: bad parameters, unknown problem ids, missing fixtures.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A physical state that the model cannot evaluate (e.g. nonpositive pressure).
class StateError : public Error {
public:
    using Error::Error;
};

/// Raised when a time step produces non-finite or inadmissible values.
class DivergenceError : public Error {
public:
    DivergenceError(int step, int stage, const std::string& what)
        : Error("divergence at step " + std::to_string(step) + ", stage " +
                std::to_string(stage) + ": " + what),
          step_(step), stage_(stage), detail_(what) {}

    int step() const { return step_; }
    int stage() const { return stage_; }
    const std::string& detail() const { return detail_; }

private:
    int step_;
    int stage_;
    std::string detail_;
};

}  // namespace weno
