#pragma once

#include <cstdint>
#include <string>

#include "csym/linalg.hpp"
#include "csym/matrix.hpp"
#include "csym/report.hpp"

namespace csym {

/// Antilinear map x -> M * conj(x). Additive, and A(a*x) = conj(a)*A(x).
///
/// Composition rules (all realized by plain matrix algebra on M):
///   antilinear A then linear B:      B o A  has matrix B * M_A
///   linear B then antilinear A:      A o B  has matrix M_A * conj(B)
///   antilinear A then antilinear A': A' o A is LINEAR with matrix M_A' * conj(M_A)
struct AntilinearMap {
    CMatrix matrix;

    std::size_t dim() const { return matrix.rows(); }
};

/// Antilinear involution that is also an isometry: M symmetric unitary.
struct Conjugation {
    CMatrix matrix;
    std::string label;

    std::size_t dim() const { return matrix.rows(); }
    AntilinearMap as_antilinear() const { return AntilinearMap{matrix}; }
};

CVector apply_antilinear(const AntilinearMap& a, const CVector& x);
CVector apply_antilinear(const Conjugation& c, const CVector& x);

/// Member of the two-parameter diagonal family: f(z) -> mu * conj(f(lambda * conj(z))),
/// i.e. M = diag(mu * conj(lambda)^k). Requires |mu| = |lambda| = 1.
Conjugation family_conjugation(cplx mu, cplx lambda, std::size_t n,
                               const ToleranceConfig& tol = {});

/// One-parameter restriction (mu = 1).
Conjugation family_conjugation(cplx lambda, std::size_t n, const ToleranceConfig& tol = {});

/// Coordinatewise conjugation C1 (M = I).
Conjugation c1_conjugation(std::size_t n);

/// M = U * U^t for Haar-random U; symmetric unitary by construction.
Conjugation random_conjugation(std::size_t n, std::uint64_t seed);

/// Checks the conjugation axioms of an antilinear map: involution
/// M*conj(M) = I, isometry M unitary, symmetry M = M^t, plus sampled pairs
/// for <Cf, Cg> = <g, f>.
VerificationReport is_conjugation(const AntilinearMap& a, const ToleranceConfig& tol = {});

/// Orthonormal basis of C-fixed vectors, returned as the columns of a unitary
/// matrix F (so M = F * F^t). Candidates u + C(u) and i*(u - C(u)) seeded from
/// the canonical basis are orthonormalized with the real inner product
/// Re<.,.>; candidates that project below the degeneracy threshold are
/// skipped. Throws if fewer than N independent fixed vectors emerge, which
/// signals a malformed input.
CMatrix fixed_basis(const Conjugation& c, const ToleranceConfig& tol = {});

/// CJ and JC are linear, with matrices M_C*conj(M_J) and M_J*conj(M_C);
/// passes iff their Frobenius distance is within identity_tol.
VerificationReport commutes(const Conjugation& c, const Conjugation& j,
                            const ToleranceConfig& tol = {});

/// Matrix of the linear composite C o J (apply J first).
CMatrix composite_matrix(const Conjugation& c, const Conjugation& j);

}  // namespace csym
