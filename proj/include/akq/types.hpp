#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace akq {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr Complex kI{0.0, 1.0};

enum class ErrorKind {
    InvalidArgument,
    Resolution,
    Incompatible,
    Numeric,
    NotConverged,
    Unsupported,
    Schema,
    Cache,
    Io,
};

// Single exception type for the library; `kind` lets callers (and the
// run scheduler) distinguish precondition failures from numeric ones.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

std::string to_string(ErrorKind kind);

}  // namespace akq
