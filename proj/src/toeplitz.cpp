#include "csym/toeplitz.hpp"

#include "csym/kernels.hpp"

namespace csym {

CMatrix toeplitz_matrix(const Symbol& phi, std::size_t n) {
    if (n == 0) throw dimension_error("toeplitz_matrix: n must be >= 1");
    CMatrix a(n, n);
    for (const auto& [deg, c] : phi.coefficients()) {
        // Coefficient of degree d sits on the diagonal j - k = d.
        if (deg >= 0) {
            for (std::size_t k = 0; k + static_cast<std::size_t>(deg) < n; ++k)
                a(k + static_cast<std::size_t>(deg), k) = c;
        } else {
            std::size_t off = static_cast<std::size_t>(-deg);
            for (std::size_t j = 0; j + off < n; ++j) a(j, j + off) = c;
        }
    }
    return a;
}

double csym_residual(const CMatrix& a, const Conjugation& c) {
    require_square(a, "csym_residual");
    if (a.rows() != c.dim()) throw dimension_error("csym_residual: dimension mismatch");
    CMatrix lhs = multiply(c.matrix, conjugate(a));
    CMatrix rhs = multiply(adjoint(a), c.matrix);
    return frobenius_distance(lhs, rhs);
}

InjectivityProxy injectivity_proxy(const CMatrix& a, const ToleranceConfig& tol) {
    tol.validate();
    require_square(a, "injectivity_proxy");
    double sigma = smallest_singular_value(a);
    return InjectivityProxy{sigma > tol.injectivity_threshold, sigma};
}

}  // namespace csym
