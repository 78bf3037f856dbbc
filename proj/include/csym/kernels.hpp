#pragma once

#include "csym/matrix.hpp"

namespace csym {

// OpenMP-parallel dense kernels. Every kernel is deterministic for a fixed
// input regardless of thread count: each output slot is accumulated serially
// in index order, and reductions combine per-row partials in row order.
// csym::serial holds the plain reference implementations used by the tests
// and the benchmark; per-slot kernels match them bit for bit, reductions
// match them to roundoff (different summation tree).

CMatrix multiply(const CMatrix& a, const CMatrix& b);
CVector matvec(const CMatrix& a, const CVector& x);

CMatrix transpose(const CMatrix& a);
CMatrix conjugate(const CMatrix& a);
CMatrix adjoint(const CMatrix& a);

CMatrix add(const CMatrix& a, const CMatrix& b);
CMatrix subtract(const CMatrix& a, const CMatrix& b);
CMatrix scale(const CMatrix& a, cplx s);

double frobenius_norm(const CMatrix& a);
double frobenius_distance(const CMatrix& a, const CMatrix& b);

CVector conjugate(const CVector& x);

namespace serial {

CMatrix multiply(const CMatrix& a, const CMatrix& b);
CVector matvec(const CMatrix& a, const CVector& x);
CMatrix transpose(const CMatrix& a);
CMatrix conjugate(const CMatrix& a);
CMatrix adjoint(const CMatrix& a);
CMatrix add(const CMatrix& a, const CMatrix& b);
CMatrix subtract(const CMatrix& a, const CMatrix& b);
CMatrix scale(const CMatrix& a, cplx s);
double frobenius_norm(const CMatrix& a);
double frobenius_distance(const CMatrix& a, const CMatrix& b);

}  // namespace serial

}  // namespace csym
