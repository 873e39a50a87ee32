#pragma once

#include <stdexcept>
#include <string>

namespace eos {

/// Malformed or physically inadmissible configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A time step produced a non-finite field value.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(long step, const std::string& what)
        : std::runtime_error("divergence at step " + std::to_string(step) + ": " + what),
          step_(step) {}

    long step() const noexcept { return step_; }

private:
    long step_;
};

/// Adaptive quadrature hit its panel cap before meeting the tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

class EigenSolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace eos
