#include "csym/linalg.hpp"

#include <cmath>
#include <random>

#include "csym/kernels.hpp"

// LAPACK (Fortran ABI, column-major). Inputs are transposed on the way in
// where the layout matters; for the quantities used here (singular values,
// eigenvalues up to order, |det|) row/column-major is immaterial or handled
// at the call site.
extern "C" {
void zgeqrf_(const int* m, const int* n, csym::cplx* a, const int* lda, csym::cplx* tau,
             csym::cplx* work, const int* lwork, int* info);
void zungqr_(const int* m, const int* n, const int* k, csym::cplx* a, const int* lda,
             const csym::cplx* tau, csym::cplx* work, const int* lwork, int* info);
void zgesvd_(const char* jobu, const char* jobvt, const int* m, const int* n, csym::cplx* a,
             const int* lda, double* s, csym::cplx* u, const int* ldu, csym::cplx* vt,
             const int* ldvt, csym::cplx* work, const int* lwork, double* rwork, int* info);
void zgeev_(const char* jobvl, const char* jobvr, const int* n, csym::cplx* a, const int* lda,
            csym::cplx* w, csym::cplx* vl, const int* ldvl, csym::cplx* vr, const int* ldvr,
            csym::cplx* work, const int* lwork, double* rwork, int* info);
void zgetrf_(const int* m, const int* n, csym::cplx* a, const int* lda, int* ipiv, int* info);
}

namespace csym {

namespace {

void check_info(int info, const char* routine) {
    if (info != 0)
        throw std::runtime_error(std::string(routine) + " failed, info=" + std::to_string(info));
}

// Column-major copy for LAPACK.
std::vector<cplx> to_col_major(const CMatrix& a) {
    std::vector<cplx> buf(a.rows() * a.cols());
    for (std::size_t k = 0; k < a.cols(); ++k)
        for (std::size_t j = 0; j < a.rows(); ++j) buf[k * a.rows() + j] = a(j, k);
    return buf;
}

}  // namespace

cplx inner_product(const CVector& f, const CVector& g) {
    if (f.size() != g.size()) throw dimension_error("inner_product: dimension mismatch");
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < f.size(); ++k) acc += f[k] * std::conj(g[k]);
    return acc;
}

double vector_norm(const CVector& x) {
    double s = 0.0;
    for (const cplx& v : x) s += std::norm(v);
    return std::sqrt(s);
}

CMatrix random_gaussian(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw dimension_error("random_gaussian: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix a(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            double re = gauss(rng);
            double im = gauss(rng);
            a(j, k) = cplx(re, im);
        }
    return a;
}

CMatrix random_unitary(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw dimension_error("random_unitary: n must be >= 1");
    CMatrix g = random_gaussian(n, seed);
    // QR in column-major; Q of the transposed matrix is still Haar.
    std::vector<cplx> a = to_col_major(g);
    const int ni = static_cast<int>(n);
    std::vector<cplx> tau(n);
    int info = 0;
    int lwork = -1;
    cplx wkopt;
    zgeqrf_(&ni, &ni, a.data(), &ni, tau.data(), &wkopt, &lwork, &info);
    check_info(info, "zgeqrf");
    lwork = static_cast<int>(wkopt.real());
    std::vector<cplx> work(static_cast<std::size_t>(lwork));
    zgeqrf_(&ni, &ni, a.data(), &ni, tau.data(), work.data(), &lwork, &info);
    check_info(info, "zgeqrf");

    // Diagonal phases of R; absorbing them into Q makes the distribution
    // invariant under the choice of QR normalization.
    std::vector<cplx> phase(n);
    for (std::size_t j = 0; j < n; ++j) {
        cplx r = a[j * n + j];
        double m = std::abs(r);
        phase[j] = (m > 0.0) ? r / m : cplx(1.0, 0.0);
    }

    lwork = -1;
    zungqr_(&ni, &ni, &ni, a.data(), &ni, tau.data(), &wkopt, &lwork, &info);
    check_info(info, "zungqr");
    lwork = static_cast<int>(wkopt.real());
    work.resize(static_cast<std::size_t>(lwork));
    zungqr_(&ni, &ni, &ni, a.data(), &ni, tau.data(), work.data(), &lwork, &info);
    check_info(info, "zungqr");

    CMatrix u(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) u(j, k) = a[k * n + j] * phase[k];
    return u;
}

std::vector<double> singular_values(const CMatrix& a) {
    require_square(a, "singular_values");
    const std::size_t n = a.rows();
    std::vector<cplx> buf = to_col_major(a);
    const int ni = static_cast<int>(n);
    std::vector<double> s(n);
    std::vector<double> rwork(5 * n);
    int info = 0;
    int lwork = -1;
    cplx wkopt;
    const char jobn = 'N';
    zgesvd_(&jobn, &jobn, &ni, &ni, buf.data(), &ni, s.data(), nullptr, &ni, nullptr, &ni, &wkopt,
            &lwork, rwork.data(), &info);
    check_info(info, "zgesvd");
    lwork = static_cast<int>(wkopt.real());
    std::vector<cplx> work(static_cast<std::size_t>(lwork));
    zgesvd_(&jobn, &jobn, &ni, &ni, buf.data(), &ni, s.data(), nullptr, &ni, nullptr, &ni,
            work.data(), &lwork, rwork.data(), &info);
    check_info(info, "zgesvd");
    return s;
}

double smallest_singular_value(const CMatrix& a) {
    return singular_values(a).back();
}

double abs_determinant(const CMatrix& a) {
    require_square(a, "abs_determinant");
    const std::size_t n = a.rows();
    std::vector<cplx> buf = to_col_major(a);
    const int ni = static_cast<int>(n);
    std::vector<int> ipiv(n);
    int info = 0;
    zgetrf_(&ni, &ni, buf.data(), &ni, ipiv.data(), &info);
    if (info < 0) check_info(info, "zgetrf");
    double logmod = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double m = std::abs(buf[j * n + j]);
        if (m == 0.0) return 0.0;
        logmod += std::log(m);
    }
    return std::exp(logmod);
}

CVector eigenvalues(const CMatrix& a) {
    require_square(a, "eigenvalues");
    const std::size_t n = a.rows();
    // zgeev on the column-major image computes the spectrum of A^T, which
    // equals the spectrum of A.
    std::vector<cplx> buf = to_col_major(a);
    const int ni = static_cast<int>(n);
    CVector w(n);
    std::vector<double> rwork(2 * n);
    int info = 0;
    int lwork = -1;
    cplx wkopt;
    const char jobn = 'N';
    zgeev_(&jobn, &jobn, &ni, buf.data(), &ni, w.data(), nullptr, &ni, nullptr, &ni, &wkopt, &lwork,
           rwork.data(), &info);
    check_info(info, "zgeev");
    lwork = static_cast<int>(wkopt.real());
    std::vector<cplx> work(static_cast<std::size_t>(lwork));
    zgeev_(&jobn, &jobn, &ni, buf.data(), &ni, w.data(), nullptr, &ni, nullptr, &ni, work.data(),
           &lwork, rwork.data(), &info);
    check_info(info, "zgeev");
    return w;
}

double spectral_distance(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "spectral_distance");
    CVector wa = eigenvalues(a);
    CVector wb = eigenvalues(b);
    std::vector<bool> used(wb.size(), false);
    double worst = 0.0;
    for (const cplx& la : wa) {
        std::size_t best = wb.size();
        double best_d = 0.0;
        for (std::size_t k = 0; k < wb.size(); ++k) {
            if (used[k]) continue;
            double d = std::abs(la - wb[k]);
            if (best == wb.size() || d < best_d) {
                best = k;
                best_d = d;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_d);
    }
    return worst;
}

}  // namespace csym
