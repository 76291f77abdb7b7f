#ifndef SKEWPAIR_ERRORS_HPP
#define SKEWPAIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewpair {

/// Raw parameters fail the admissibility gates (lambda > 0, rho^2 + sigma^2 = 1,
/// eta + zeta != 0, alpha in [0,1]).
class WellPosednessError : public std::invalid_argument {
  public:
    enum class Kind { GateViolation, EtaPlusZetaZero, AlphaOutOfRange };
    WellPosednessError(Kind k, const std::string& msg) : std::invalid_argument(msg), kind(k) {}
    Kind kind;
};

/// Argument outside the domain of an operation (e.g. boundary skewness for the
/// scale transform).
class DomainError : public std::invalid_argument {
  public:
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Inverse-CDF root finding in the exact one-step sampler failed to converge.
class SamplerError : public std::runtime_error {
  public:
    explicit SamplerError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Occupation-estimator bandwidth too small for the grid step.
class BandwidthError : public std::invalid_argument {
  public:
    explicit BandwidthError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Paths combined across incompatible grids.
class GridMismatch : public std::invalid_argument {
  public:
    explicit GridMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Adaptive quadrature did not reach the requested tolerance.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& msg, double value, double error)
        : std::runtime_error(msg), value(value), error(error) {}
    double value;
    double error;
};

/// Planar density query outside the support of the requested case.
class RegionError : public std::invalid_argument {
  public:
    explicit RegionError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Planar density case does not match the supplied parameters.
class CaseMismatch : public std::invalid_argument {
  public:
    explicit CaseMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Malformed configuration or experiment spec.
class ConfigError : public std::invalid_argument {
  public:
    explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Requested simulation exceeds the configured memory budget.
class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace skewpair

#endif
