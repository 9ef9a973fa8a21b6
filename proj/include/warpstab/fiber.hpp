#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "warpstab/errors.hpp"

namespace warpstab {

/// Sign of the fiber Einstein constant under the normalization
/// Ric = (n-1) g, Ric = 0 or Ric = -(n-1) g.
enum class EinsteinSign { Positive, Zero, Negative };

inline const char* to_string(EinsteinSign s) {
    switch (s) {
        case EinsteinSign::Positive: return "positive";
        case EinsteinSign::Zero: return "zero";
        case EinsteinSign::Negative: return "negative";
    }
    return "?";
}

/// Spectral data of the fiber that the classification theorems consume.
///
/// kappa_min is the bottom of the Einstein operator on TT-tensors
/// (L2/Dirichlet bottom in the noncompact case); -infinity is allowed.
/// The Laplacian spectrum may be a finite prefix plus a certified tail
/// bound ("all further eigenvalues >= tail_bound").
struct FiberSpectrum {
    int n = 0;
    EinsteinSign einstein_sign = EinsteinSign::Positive;
    double kappa_min = 0.0;
    bool kappa_min_attained_strictly = false;  // true: kappa > kappa_min on all of spec
    std::vector<double> laplacian_eigenvalues; // nonzero spectrum, ascending
    std::optional<double> tail_bound;          // all further eigenvalues >= this
    bool is_round_sphere = false;

    void validate() const {
        if (n < 2) throw PreconditionError("fiber dimension must be >= 2");
        double prev = 0.0;
        for (double lam : laplacian_eigenvalues) {
            if (!(lam > 0.0))
                throw PreconditionError("laplacian eigenvalues must be strictly positive");
            if (lam < prev)
                throw PreconditionError("laplacian eigenvalues must be nondecreasing");
            prev = lam;
        }
        if (tail_bound && !(*tail_bound > 0.0))
            throw PreconditionError("tail bound must be positive");
        if (std::isnan(kappa_min)) throw PreconditionError("kappa_min is NaN");
    }
};

} // namespace warpstab
