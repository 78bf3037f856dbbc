#include "csym/kernels.hpp"

#include <cmath>

namespace csym::serial {

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw dimension_error("multiply: inner dimensions differ");
    CMatrix c(a.rows(), b.cols());
    for (std::size_t j = 0; j < a.rows(); ++j) {
        for (std::size_t k = 0; k < b.cols(); ++k) {
            cplx acc(0.0, 0.0);
            for (std::size_t t = 0; t < a.cols(); ++t) acc += a(j, t) * b(t, k);
            c(j, k) = acc;
        }
    }
    return c;
}

CVector matvec(const CMatrix& a, const CVector& x) {
    if (a.cols() != x.size()) throw dimension_error("matvec: dimension mismatch");
    CVector y(a.rows());
    for (std::size_t j = 0; j < a.rows(); ++j) {
        cplx acc(0.0, 0.0);
        for (std::size_t k = 0; k < a.cols(); ++k) acc += a(j, k) * x[k];
        y[j] = acc;
    }
    return y;
}

CMatrix transpose(const CMatrix& a) {
    CMatrix t(a.cols(), a.rows());
    for (std::size_t j = 0; j < a.rows(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) t(k, j) = a(j, k);
    return t;
}

CMatrix conjugate(const CMatrix& a) {
    CMatrix c(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.rows(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) c(j, k) = std::conj(a(j, k));
    return c;
}

CMatrix adjoint(const CMatrix& a) {
    CMatrix h(a.cols(), a.rows());
    for (std::size_t j = 0; j < a.rows(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) h(k, j) = std::conj(a(j, k));
    return h;
}

CMatrix add(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "add");
    CMatrix c(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.rows(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) c(j, k) = a(j, k) + b(j, k);
    return c;
}

CMatrix subtract(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "subtract");
    CMatrix c(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.rows(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) c(j, k) = a(j, k) - b(j, k);
    return c;
}

CMatrix scale(const CMatrix& a, cplx s) {
    CMatrix c(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.rows(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) c(j, k) = s * a(j, k);
    return c;
}

double frobenius_norm(const CMatrix& a) {
    double total = 0.0;
    for (std::size_t j = 0; j < a.rows(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) total += std::norm(a(j, k));
    return std::sqrt(total);
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "frobenius_distance");
    double total = 0.0;
    for (std::size_t j = 0; j < a.rows(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) total += std::norm(a(j, k) - b(j, k));
    return std::sqrt(total);
}

}  // namespace csym::serial
