#pragma once

#include <stdexcept>
#include <string>

namespace u3 {

// Base class for all runtime diagnostics raised when a numerical
// consistency condition fails.  Callers that want a single catch point
// (e.g. the CLI, which maps these to exit code 2) catch this type.
struct NumericalDiagnostic : std::runtime_error {
    explicit NumericalDiagnostic(const std::string& msg) : std::runtime_error(msg) {}
};

// A least-squares solve left a residual above the consistency bound
// tol * (|A| |x| + |b|); the linear system that should have been
// consistent was not.
struct ResidualTooLarge : NumericalDiagnostic {
    explicit ResidualTooLarge(const std::string& msg) : NumericalDiagnostic(msg) {}
};

// A numerically determined multiplicity (null-space dimension, number of
// orthonormal rows, ...) disagrees with the combinatorial prediction.
struct MultiplicityMismatch : NumericalDiagnostic {
    explicit MultiplicityMismatch(const std::string& msg) : NumericalDiagnostic(msg) {}
};

// A linear system whose solution should be uniquely determined turned out
// rank deficient.
struct SingularSystem : NumericalDiagnostic {
    explicit SingularSystem(const std::string& msg) : NumericalDiagnostic(msg) {}
};

// Two internal computations of the same quantity disagree (e.g. angular
// momentum content counted two different ways).
struct InternalMismatch : NumericalDiagnostic {
    explicit InternalMismatch(const std::string& msg) : NumericalDiagnostic(msg) {}
};

} // namespace u3
