#ifndef EPRSIM_ERRORS_HPP
#define EPRSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eprsim {

/// A probe quadrature with zero variance cannot be used for regression.
class DegenerateProbeError : public std::runtime_error {
public:
    explicit DegenerateProbeError(const std::string& what) : std::runtime_error(what) {}
};

/// Conditioning update hit a non-positive measured variance.
class NumericalDegeneracyError : public std::runtime_error {
public:
    explicit NumericalDegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

/// QKD with a fully blocked channel (eta_B = 0) has no key rate to report.
class NoChannelError : public std::invalid_argument {
public:
    explicit NoChannelError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace eprsim

#endif // EPRSIM_ERRORS_HPP
