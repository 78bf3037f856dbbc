#include "csym/kernels.hpp"

#include <cmath>
#include <cstdint>

namespace csym {

// Entry-count threshold below which the parallel loops stay sequential;
// fork/join costs more than the work for the small sweeps.
namespace {
constexpr std::int64_t kParallelGrain = 16 * 1024;

inline std::int64_t entries(const CMatrix& a) {
    return static_cast<std::int64_t>(a.rows()) * static_cast<std::int64_t>(a.cols());
}
}  // namespace

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw dimension_error("multiply: inner dimensions differ");
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    const std::size_t m = a.cols(), p = b.cols();
    CMatrix c(a.rows(), p);
#pragma omp parallel for if (entries(a) + entries(b) >= kParallelGrain) schedule(static)
    for (std::int64_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < p; ++k) {
            cplx acc(0.0, 0.0);
            for (std::size_t t = 0; t < m; ++t) acc += a(j, t) * b(t, k);
            c(j, k) = acc;
        }
    }
    return c;
}

CVector matvec(const CMatrix& a, const CVector& x) {
    if (a.cols() != x.size()) throw dimension_error("matvec: dimension mismatch");
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    CVector y(a.rows());
#pragma omp parallel for if (entries(a) >= kParallelGrain) schedule(static)
    for (std::int64_t j = 0; j < n; ++j) {
        cplx acc(0.0, 0.0);
        for (std::size_t k = 0; k < a.cols(); ++k) acc += a(j, k) * x[k];
        y[j] = acc;
    }
    return y;
}

CMatrix transpose(const CMatrix& a) {
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    CMatrix t(a.cols(), a.rows());
#pragma omp parallel for if (entries(a) >= kParallelGrain) schedule(static)
    for (std::int64_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) t(k, j) = a(j, k);
    return t;
}

CMatrix conjugate(const CMatrix& a) {
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    CMatrix c(a.rows(), a.cols());
#pragma omp parallel for if (entries(a) >= kParallelGrain) schedule(static)
    for (std::int64_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) c(j, k) = std::conj(a(j, k));
    return c;
}

CMatrix adjoint(const CMatrix& a) {
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    CMatrix h(a.cols(), a.rows());
#pragma omp parallel for if (entries(a) >= kParallelGrain) schedule(static)
    for (std::int64_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) h(k, j) = std::conj(a(j, k));
    return h;
}

CMatrix add(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "add");
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    CMatrix c(a.rows(), a.cols());
#pragma omp parallel for if (entries(a) >= kParallelGrain) schedule(static)
    for (std::int64_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) c(j, k) = a(j, k) + b(j, k);
    return c;
}

CMatrix subtract(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "subtract");
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    CMatrix c(a.rows(), a.cols());
#pragma omp parallel for if (entries(a) >= kParallelGrain) schedule(static)
    for (std::int64_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) c(j, k) = a(j, k) - b(j, k);
    return c;
}

CMatrix scale(const CMatrix& a, cplx s) {
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    CMatrix c(a.rows(), a.cols());
#pragma omp parallel for if (entries(a) >= kParallelGrain) schedule(static)
    for (std::int64_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) c(j, k) = s * a(j, k);
    return c;
}

double frobenius_norm(const CMatrix& a) {
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    std::vector<double> row_sums(a.rows(), 0.0);
#pragma omp parallel for if (entries(a) >= kParallelGrain) schedule(static)
    for (std::int64_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.cols(); ++k) s += std::norm(a(j, k));
        row_sums[j] = s;
    }
    double total = 0.0;
    for (double s : row_sums) total += s;
    return std::sqrt(total);
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "frobenius_distance");
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    std::vector<double> row_sums(a.rows(), 0.0);
#pragma omp parallel for if (entries(a) >= kParallelGrain) schedule(static)
    for (std::int64_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.cols(); ++k) s += std::norm(a(j, k) - b(j, k));
        row_sums[j] = s;
    }
    double total = 0.0;
    for (double s : row_sums) total += s;
    return std::sqrt(total);
}

CVector conjugate(const CVector& x) {
    CVector y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) y[k] = std::conj(x[k]);
    return y;
}

}  // namespace csym
