#pragma once
#include <stdexcept>
#include <string>

namespace rotwave {

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};
struct SingularJacobian : std::runtime_error {
    explicit SingularJacobian(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateEigenvalue : std::runtime_error {
    explicit DegenerateEigenvalue(const std::string& what) : std::runtime_error(what) {}
};
struct LinearSolveFailure : std::runtime_error {
    explicit LinearSolveFailure(const std::string& what) : std::runtime_error(what) {}
};
struct UnderResolved : std::runtime_error {
    explicit UnderResolved(const std::string& what) : std::runtime_error(what) {}
};
// Phase-defining matrix became singular (stopping time tau reached).
struct Stopped : std::runtime_error {
    double tau;
    explicit Stopped(double t) : std::runtime_error("phase stopped at tau"), tau(t) {}
};
struct GridMismatch : std::invalid_argument {
    explicit GridMismatch(const std::string& what) : std::invalid_argument(what) {}
};
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};
struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rotwave
