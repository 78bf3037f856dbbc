#pragma once

#include <cstdint>

#include "csym/matrix.hpp"

namespace csym {

struct ToleranceConfig {
    double identity_tol = 1e-10;
    double injectivity_threshold = 1e-6;
    double basis_degeneracy_threshold = 1e-8;

    void validate() const {
        if (identity_tol <= 0.0 || injectivity_threshold <= 0.0 ||
            basis_degeneracy_threshold <= 0.0)
            throw std::invalid_argument("ToleranceConfig: thresholds must be strictly positive");
    }
};

/// Sum_k f_k * conj(g_k); linear in f, conjugate-linear in g.
cplx inner_product(const CVector& f, const CVector& g);

double vector_norm(const CVector& x);

/// Haar-distributed n x n unitary: QR of a complex Gaussian matrix with the
/// triangular factor's diagonal phases absorbed into Q. Deterministic per seed.
CMatrix random_unitary(std::size_t n, std::uint64_t seed);

/// Complex Gaussian (Ginibre) matrix, entries N(0,1) + i N(0,1). Deterministic per seed.
CMatrix random_gaussian(std::size_t n, std::uint64_t seed);

/// All singular values, descending.
std::vector<double> singular_values(const CMatrix& a);

double smallest_singular_value(const CMatrix& a);

double abs_determinant(const CMatrix& a);

/// Eigenvalues of a general square complex matrix, unordered.
CVector eigenvalues(const CMatrix& a);

/// Greedy matching distance between the eigenvalue multisets of two matrices:
/// the largest pairing gap after nearest-neighbor assignment.
double spectral_distance(const CMatrix& a, const CMatrix& b);

}  // namespace csym
