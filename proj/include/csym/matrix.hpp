#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace csym {

using cplx = std::complex<double>;

/// Coefficient vector of a truncated Hardy-space element: entry k is the
/// coefficient of z^k.
using CVector = std::vector<cplx>;

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major complex matrix. Entry (j, k) is the j-th coordinate of the
/// image of the k-th canonical basis vector.
class CMatrix {
  public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static CMatrix diagonal(const CVector& d) {
        CMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t j, std::size_t k) { return data_[j * cols_ + k]; }
    const cplx& operator()(std::size_t j, std::size_t k) const { return data_[j * cols_ + k]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    CVector column(std::size_t k) const {
        CVector c(rows_);
        for (std::size_t j = 0; j < rows_; ++j) c[j] = (*this)(j, k);
        return c;
    }

    void set_column(std::size_t k, const CVector& c) {
        for (std::size_t j = 0; j < rows_; ++j) (*this)(j, k) = c[j];
    }

    bool operator==(const CMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<cplx> data_;
};

inline void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error(std::string(what) + ": shape mismatch");
}

inline void require_square(const CMatrix& a, const char* what) {
    if (!a.square() || a.rows() == 0)
        throw dimension_error(std::string(what) + ": square nonempty matrix required");
}

}  // namespace csym
