#include "csym/conjugation.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "csym/kernels.hpp"

namespace csym {

namespace {

std::string format_cplx(cplx z) {
    double re = z.real() + 0.0;  // flush -0
    double im = z.imag() + 0.0;
    std::ostringstream os;
    os << re;
    if (im >= 0.0)
        os << "+" << im << "i";
    else
        os << "-" << -im << "i";
    return os.str();
}

CVector unit_vector(std::size_t n, std::size_t k) {
    CVector e(n, cplx(0.0, 0.0));
    e[k] = 1.0;
    return e;
}

// Real-inner-product Gram-Schmidt step against the accepted columns, applied
// twice; returns the residual norm before normalization.
double project_out(CVector& v, const std::vector<CVector>& accepted) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const CVector& f : accepted) {
            double coeff = inner_product(v, f).real();
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= coeff * f[j];
        }
    }
    return vector_norm(v);
}

}  // namespace

CVector apply_antilinear(const AntilinearMap& a, const CVector& x) {
    if (a.matrix.cols() != x.size()) throw dimension_error("apply_antilinear: dimension mismatch");
    return matvec(a.matrix, conjugate(x));
}

CVector apply_antilinear(const Conjugation& c, const CVector& x) {
    return apply_antilinear(c.as_antilinear(), x);
}

Conjugation family_conjugation(cplx mu, cplx lambda, std::size_t n, const ToleranceConfig& tol) {
    tol.validate();
    if (n == 0) throw dimension_error("family_conjugation: n must be >= 1");
    if (std::abs(std::abs(mu) - 1.0) > tol.identity_tol)
        throw std::invalid_argument("family_conjugation: |mu| != 1");
    if (std::abs(std::abs(lambda) - 1.0) > tol.identity_tol)
        throw std::invalid_argument("family_conjugation: |lambda| != 1");
    CVector d(n);
    cplx p(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        d[k] = mu * p;
        p *= std::conj(lambda);
    }
    return Conjugation{CMatrix::diagonal(d),
                       "family:" + format_cplx(mu) + "," + format_cplx(lambda)};
}

Conjugation family_conjugation(cplx lambda, std::size_t n, const ToleranceConfig& tol) {
    return family_conjugation(cplx(1.0, 0.0), lambda, n, tol);
}

Conjugation c1_conjugation(std::size_t n) {
    if (n == 0) throw dimension_error("c1_conjugation: n must be >= 1");
    return Conjugation{CMatrix::identity(n), "C1"};
}

Conjugation random_conjugation(std::size_t n, std::uint64_t seed) {
    CMatrix u = random_unitary(n, seed);
    return Conjugation{multiply(u, transpose(u)), "random:" + std::to_string(seed)};
}

VerificationReport is_conjugation(const AntilinearMap& a, const ToleranceConfig& tol) {
    tol.validate();
    require_square(a.matrix, "is_conjugation");
    const std::size_t n = a.dim();
    const CMatrix eye = CMatrix::identity(n);

    VerificationReport rep;
    rep.name = "is_conjugation";
    rep.parameters["dim"] = std::to_string(n);
    rep.residuals["involution"] = frobenius_distance(multiply(a.matrix, conjugate(a.matrix)), eye);
    rep.residuals["isometry"] = frobenius_distance(multiply(a.matrix, adjoint(a.matrix)), eye);
    rep.residuals["symmetry"] = frobenius_distance(a.matrix, transpose(a.matrix));

    // Spot check <Cf, Cg> = <g, f> on a few deterministic sample pairs.
    std::mt19937_64 rng(0x5eedu + n);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 0.0;
    for (int s = 0; s < 8; ++s) {
        CVector f(n), g(n);
        for (std::size_t k = 0; k < n; ++k) {
            f[k] = cplx(gauss(rng), gauss(rng));
            g[k] = cplx(gauss(rng), gauss(rng));
        }
        cplx lhs = inner_product(apply_antilinear(a, f), apply_antilinear(a, g));
        cplx rhs = inner_product(g, f);
        double scale = std::max(1.0, std::abs(rhs));
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    rep.residuals["isometry_samples"] = worst;

    rep.passed = true;
    for (const auto& [key, r] : rep.residuals)
        if (r > tol.identity_tol) rep.passed = false;
    return rep;
}

CMatrix fixed_basis(const Conjugation& c, const ToleranceConfig& tol) {
    tol.validate();
    require_square(c.matrix, "fixed_basis");
    VerificationReport axioms = is_conjugation(c.as_antilinear(), tol);
    if (!axioms.passed)
        throw std::invalid_argument("fixed_basis: input fails the conjugation axioms");

    const std::size_t n = c.dim();
    std::vector<CVector> accepted;
    accepted.reserve(n);

    auto try_candidate = [&](CVector v) {
        if (accepted.size() == n) return;
        if (vector_norm(v) < tol.basis_degeneracy_threshold) return;
        double r = project_out(v, accepted);
        if (r < tol.basis_degeneracy_threshold) return;
        for (std::size_t j = 0; j < n; ++j) v[j] /= r;
        // Polish: re-project onto the fixed subspace and the orthogonal
        // complement so the accepted column is fixed to roundoff even when
        // the Gram-Schmidt residual was barely above the threshold.
        for (int round = 0; round < 2; ++round) {
            CVector cv = apply_antilinear(c, v);
            for (std::size_t j = 0; j < n; ++j) v[j] = 0.5 * (v[j] + cv[j]);
            double s = project_out(v, accepted);
            if (s < 0.5) return;  // candidate collapsed; discard
            for (std::size_t j = 0; j < n; ++j) v[j] /= s;
        }
        accepted.push_back(std::move(v));
    };

    // First sweep follows the primary/fallback rule; the second sweep feeds
    // each seed's complementary vector. Both u + C(u) and i*(u - C(u)) are
    // C-fixed, and together over all canonical seeds they span the whole
    // fixed subspace, which a single sweep does not guarantee.
    std::vector<CVector> complementary;
    for (std::size_t k = 0; k < n && accepted.size() < n; ++k) {
        CVector u = unit_vector(n, k);
        CVector cu = apply_antilinear(c, u);
        CVector sum(n), diff(n);
        for (std::size_t j = 0; j < n; ++j) {
            sum[j] = u[j] + cu[j];
            diff[j] = cplx(0.0, 1.0) * (u[j] - cu[j]);
        }
        if (vector_norm(sum) < tol.basis_degeneracy_threshold) {
            try_candidate(diff);
            complementary.push_back(std::move(sum));
        } else {
            try_candidate(sum);
            complementary.push_back(std::move(diff));
        }
    }
    for (std::size_t k = 0; k < complementary.size() && accepted.size() < n; ++k)
        try_candidate(std::move(complementary[k]));

    if (accepted.size() < n)
        throw std::invalid_argument("fixed_basis: found only " +
                                    std::to_string(accepted.size()) + " of " + std::to_string(n) +
                                    " independent fixed vectors");

    CMatrix f(n, n);
    for (std::size_t k = 0; k < n; ++k) f.set_column(k, accepted[k]);
    return f;
}

CMatrix composite_matrix(const Conjugation& c, const Conjugation& j) {
    if (c.dim() != j.dim()) throw dimension_error("composite_matrix: dimension mismatch");
    return multiply(c.matrix, conjugate(j.matrix));
}

VerificationReport commutes(const Conjugation& c, const Conjugation& j,
                            const ToleranceConfig& tol) {
    tol.validate();
    if (c.dim() != j.dim()) throw dimension_error("commutes: dimension mismatch");
    VerificationReport rep;
    rep.name = "commutes";
    rep.parameters["dim"] = std::to_string(c.dim());
    rep.parameters["C"] = c.label;
    rep.parameters["J"] = j.label;
    rep.residuals["commutator"] = frobenius_distance(composite_matrix(c, j), composite_matrix(j, c));
    rep.passed = rep.residuals["commutator"] <= tol.identity_tol;
    return rep;
}

}  // namespace csym
