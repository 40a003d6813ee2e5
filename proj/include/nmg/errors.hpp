// errors.hpp — exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace nmg {

struct QuadratureNotConverged : std::runtime_error {
    explicit QuadratureNotConverged(const std::string& what)
        : std::runtime_error("quadrature not converged: " + what) {}
};

struct DivergentOccupation : std::runtime_error {
    explicit DivergentOccupation(const std::string& what)
        : std::runtime_error("divergent occupation: " + what) {}
};

struct OnBandError : std::invalid_argument {
    explicit OnBandError(const std::string& what)
        : std::invalid_argument("frequency inside band support: " + what) {}
};

struct StepTooLarge : std::runtime_error {
    explicit StepTooLarge(const std::string& what)
        : std::runtime_error("volterra step unstable: " + what) {}
};

struct SingularU : std::runtime_error {
    explicit SingularU(const std::string& what)
        : std::runtime_error("singular propagator: " + what) {}
};

struct RootSearchInconclusive : std::runtime_error {
    explicit RootSearchInconclusive(const std::string& what)
        : std::runtime_error("root search inconclusive: " + what) {}
};

struct TruncationOverflow : std::runtime_error {
    explicit TruncationOverflow(const std::string& what)
        : std::runtime_error("fock truncation overflow: " + what) {}
};

struct ConfigError : std::runtime_error {
    std::string pointer;  // JSON pointer to the offending field
    ConfigError(std::string json_pointer, const std::string& what)
        : std::runtime_error("config error at '" + json_pointer + "': " + what),
          pointer(std::move(json_pointer)) {}
};

struct TaskError : std::runtime_error {
    TaskError(const std::string& task, const std::string& what)
        : std::runtime_error("task '" + task + "' failed: " + what) {}
};

}  // namespace nmg
