#pragma once

#include <stdexcept>
#include <string>

namespace warpstab {

/// Invalid numeric argument (negative eigenvalue, lambda outside the
/// admissible range of a formula, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Fiber dimension outside the supported range (classification needs n >= 4).
class UnsupportedDimension : public DomainError {
public:
    explicit UnsupportedDimension(const std::string& what) : DomainError(what) {}
};

/// An operation was called on data that violates its stated precondition
/// (wrong Einstein sign, empty spectrum, ...).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical failure tied to grid resolution (cutoff ramp not resolved,
/// eigensolver did not converge, ...).
class ResolutionError : public std::runtime_error {
public:
    explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// Weight evaluation would overflow on the truncated cosh line.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// A normalization form degenerated (zero block in B for the requested
/// parameters).
class DegenerateNormalization : public DomainError {
public:
    explicit DegenerateNormalization(const std::string& what) : DomainError(what) {}
};

/// Sign of theta_min changed under grid refinement; carries both values.
class InconclusiveResolution : public std::runtime_error {
public:
    InconclusiveResolution(const std::string& what, double coarse, double fine)
        : std::runtime_error(what), theta_coarse(coarse), theta_fine(fine) {}
    double theta_coarse;
    double theta_fine;
};

/// The positivity pre-scan found more than one sign change in lambda.
class MultiTransition : public std::runtime_error {
public:
    explicit MultiTransition(const std::string& what) : std::runtime_error(what) {}
};

/// A quantity the source material proves strictly positive came out <= 0.
/// Reported, never clamped.
class StrictPositivityViolation : public std::runtime_error {
public:
    StrictPositivityViolation(const std::string& what, double theta)
        : std::runtime_error(what), theta_min(theta) {}
    double theta_min;
};

/// Malformed fixture line.
class FixtureError : public std::runtime_error {
public:
    FixtureError(const std::string& what, int line_no)
        : std::runtime_error(what), line(line_no) {}
    int line;
};

} // namespace warpstab
