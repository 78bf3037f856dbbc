#pragma once

#include "csym/conjugation.hpp"
#include "csym/linalg.hpp"
#include "csym/symbol.hpp"

namespace csym {

/// n x n compression of multiplication by phi followed by projection onto
/// nonnegative degrees: entry (j, k) = phihat(j - k).
CMatrix toeplitz_matrix(const Symbol& phi, std::size_t n);

/// Frobenius residual of the antilinear identity C A = A* C,
/// i.e. || M_C * conj(A) - A^H * M_C ||_F.
double csym_residual(const CMatrix& a, const Conjugation& c);

/// Finite-section stand-in for injectivity: smallest singular value and
/// whether it clears the threshold.
struct InjectivityProxy {
    bool injective;
    double sigma_min;
};

InjectivityProxy injectivity_proxy(const CMatrix& a, const ToleranceConfig& tol = {});

}  // namespace csym
