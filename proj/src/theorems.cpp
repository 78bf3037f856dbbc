#include "csym/theorems.hpp"

#include <cmath>
#include <sstream>

#include "csym/kernels.hpp"

namespace csym {

namespace {

// Tolerance for identities that hold exactly in floating point, not merely
// up to accumulated roundoff.
constexpr double kExactIdentityTol = 1e-13;

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

void require_csym(const CMatrix& a, const Conjugation& c, double tol, const char* where) {
    double r = csym_residual(a, c);
    if (r > tol)
        throw std::invalid_argument(std::string(where) + ": operator is not " + c.label +
                                    "-symmetric (residual " + fmt(r) + ")");
}

void require_commuting(const Conjugation& c, const Conjugation& j, const ToleranceConfig& tol,
                       const char* where) {
    VerificationReport rep = commutes(c, j, tol);
    if (!rep.passed)
        throw std::invalid_argument(std::string(where) + ": conjugations do not commute (residual " +
                                    fmt(rep.residuals.at("commutator")) + ")");
}

// Columns of the image of B under the antilinear map with matrix M.
CMatrix antilinear_columns(const CMatrix& m, const CMatrix& b) {
    return multiply(m, conjugate(b));
}

}  // namespace

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::T2_1: return "T2.1";
        case TheoremId::P2_2: return "P2.2";
        case TheoremId::R2_3: return "R2.3";
        case TheoremId::C2_4: return "C2.4";
        case TheoremId::T2_5: return "T2.5";
        case TheoremId::R2_6: return "R2.6";
        case TheoremId::EX: return "EX";
        case TheoremId::P_CONVERSE: return "P-CONVERSE";
        case TheoremId::C2_8: return "C2.8";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
    for (TheoremId id : all_theorems())
        if (theorem_name(id) == name) return id;
    return std::nullopt;
}

std::vector<TheoremId> all_theorems() {
    return {TheoremId::T2_1, TheoremId::P2_2, TheoremId::R2_3,
            TheoremId::C2_4, TheoremId::T2_5, TheoremId::R2_6,
            TheoremId::EX,   TheoremId::P_CONVERSE, TheoremId::C2_8};
}

CMatrix intertwiner_from_conjugation(const Conjugation& c, const ToleranceConfig& tol) {
    return adjoint(fixed_basis(c, tol));
}

Conjugation conjugation_from_isomorphism(const CMatrix& t, const ToleranceConfig& tol) {
    tol.validate();
    require_square(t, "conjugation_from_isomorphism");
    double u = frobenius_distance(multiply(t, adjoint(t)), CMatrix::identity(t.rows()));
    if (u > tol.identity_tol)
        throw std::invalid_argument("conjugation_from_isomorphism: T is not unitary (residual " +
                                    fmt(u) + ")");
    return Conjugation{multiply(adjoint(t), conjugate(t)), "from_isomorphism"};
}

CMatrix transport_operator(const CMatrix& a, const CMatrix& t, const ToleranceConfig& tol) {
    tol.validate();
    require_square(a, "transport_operator");
    require_same_shape(a, t, "transport_operator");
    double u = frobenius_distance(multiply(t, adjoint(t)), CMatrix::identity(t.rows()));
    if (u > 1e3 * tol.identity_tol)
        throw std::invalid_argument("transport_operator: T is not unitary (residual " + fmt(u) +
                                    ")");
    return multiply(multiply(t, a), adjoint(t));
}

VerificationReport check_symmetric_equivalence(const CMatrix& a, const ToleranceConfig& tol) {
    tol.validate();
    require_square(a, "check_symmetric_equivalence");
    Conjugation c1 = c1_conjugation(a.rows());
    VerificationReport rep;
    rep.name = "C2.4";
    rep.parameters["dim"] = std::to_string(a.rows());
    double r1 = csym_residual(a, c1);
    double r2 = frobenius_distance(a, transpose(a));
    rep.residuals["csym_c1"] = r1;
    rep.residuals["transpose_gap"] = r2;
    rep.residuals["identity_gap"] = std::abs(r1 - r2);
    rep.passed = rep.residuals["identity_gap"] <= kExactIdentityTol;
    bool symmetric = r1 <= tol.identity_tol && r2 <= tol.identity_tol;
    rep.notes = symmetric ? "C1-symmetric" : "not C1-symmetric";
    return rep;
}

CMatrix symmetrize(const CMatrix& a, const Conjugation& c) {
    require_square(a, "symmetrize");
    if (a.rows() != c.dim()) throw dimension_error("symmetrize: dimension mismatch");
    return multiply(multiply(c.matrix, transpose(a)), conjugate(c.matrix));
}

CMatrix make_doubly_symmetric(const CMatrix& a, const Conjugation& c, const Conjugation& j,
                              const ToleranceConfig& tol) {
    tol.validate();
    require_square(a, "make_doubly_symmetric");
    require_commuting(c, j, tol, "make_doubly_symmetric");
    CMatrix sj = symmetrize(a, j);
    CMatrix p = add(add(a, symmetrize(a, c)), add(sj, symmetrize(sj, c)));
    return scale(p, cplx(0.25, 0.0));
}

CMatrix commuting_fixed_subspace(const Conjugation& c, const Conjugation& j,
                                 const ToleranceConfig& tol) {
    tol.validate();
    require_commuting(c, j, tol, "commuting_fixed_subspace");
    const std::size_t n = c.dim();
    CMatrix v = composite_matrix(c, j);
    // For a commuting pair V = CJ is unitary Hermitian, so (I + V)/2 is the
    // orthogonal projection onto ker(CJ - I).
    CMatrix proj = scale(add(v, CMatrix::identity(n)), cplx(0.5, 0.0));
    std::size_t rank = 0;
    {
        double tr = 0.0;
        for (std::size_t k = 0; k < n; ++k) tr += proj(k, k).real();
        rank = static_cast<std::size_t>(std::llround(tr));
    }
    if (rank == 0) return CMatrix(n, 0);

    // Pivoted modified Gram-Schmidt on the projector's columns.
    std::vector<CVector> cols(n);
    for (std::size_t k = 0; k < n; ++k) cols[k] = proj.column(k);
    std::vector<CVector> basis;
    basis.reserve(rank);
    std::vector<bool> used(n, false);
    while (basis.size() < rank) {
        std::size_t best = n;
        double best_norm = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (used[k]) continue;
            double nk = vector_norm(cols[k]);
            if (nk > best_norm) {
                best_norm = nk;
                best = k;
            }
        }
        if (best == n || best_norm < tol.basis_degeneracy_threshold)
            throw std::runtime_error("commuting_fixed_subspace: projector rank deficiency");
        used[best] = true;
        CVector v0 = cols[best];
        for (int pass = 0; pass < 2; ++pass)
            for (const CVector& b : basis) {
                cplx coeff = inner_product(v0, b);
                for (std::size_t t = 0; t < n; ++t) v0[t] -= coeff * b[t];
            }
        double nv = vector_norm(v0);
        if (nv < tol.basis_degeneracy_threshold) continue;
        for (std::size_t t = 0; t < n; ++t) v0[t] /= nv;
        basis.push_back(std::move(v0));
        for (std::size_t k = 0; k < n; ++k) {
            if (used[k]) continue;
            cplx coeff = inner_product(cols[k], basis.back());
            for (std::size_t t = 0; t < n; ++t) cols[k][t] -= coeff * basis.back()[t];
        }
    }
    CMatrix b(n, rank);
    for (std::size_t k = 0; k < rank; ++k) b.set_column(k, basis[k]);
    return b;
}

CMatrix joint_fixed_basis(const Conjugation& c, const Conjugation& j, const ToleranceConfig& tol) {
    CMatrix bplus = commuting_fixed_subspace(c, j, tol);
    const std::size_t d = bplus.cols();
    if (d == 0) return bplus;
    // C restricts to a conjugation of ker(CJ - I); its fixed basis there is
    // fixed by J as well, since C and J agree on that subspace.
    CMatrix small = multiply(adjoint(bplus), antilinear_columns(c.matrix, bplus));
    Conjugation restricted{small, c.label + "|commuting-fixed"};
    CMatrix f = fixed_basis(restricted, tol);
    return multiply(bplus, f);
}

VerificationReport verify_theorem_2_5(const CMatrix& a, const Conjugation& c, const Conjugation& j,
                                      const ToleranceConfig& tol) {
    tol.validate();
    require_square(a, "verify_theorem_2_5");
    require_csym(a, c, tol.identity_tol, "verify_theorem_2_5");
    require_csym(a, j, tol.identity_tol, "verify_theorem_2_5");
    require_commuting(c, j, tol, "verify_theorem_2_5");

    const CMatrix ah = adjoint(a);
    const CMatrix f = fixed_basis(c, tol);
    const CMatrix g = fixed_basis(j, tol);
    const CMatrix bplus = commuting_fixed_subspace(c, j, tol);

    VerificationReport rep;
    rep.name = "T2.5";
    rep.parameters["dim"] = std::to_string(a.rows());
    rep.parameters["C"] = c.label;
    rep.parameters["J"] = j.label;

    // (a) T*C = JTJ on the C-fixed basis.
    {
        CMatrix lhs = multiply(ah, antilinear_columns(c.matrix, f));
        CMatrix jtj = multiply(multiply(j.matrix, conjugate(a)), conjugate(j.matrix));
        rep.residuals["a_TstarC_eq_JTJ"] = frobenius_distance(lhs, multiply(jtj, f));
    }
    // (b) T*J = CTC on the J-fixed basis.
    {
        CMatrix lhs = multiply(ah, antilinear_columns(j.matrix, g));
        CMatrix ctc = multiply(multiply(c.matrix, conjugate(a)), conjugate(c.matrix));
        rep.residuals["b_TstarJ_eq_CTC"] = frobenius_distance(lhs, multiply(ctc, g));
    }
    // (c), (d) on the commuting-fixed subspace, where C and J agree.
    const CMatrix ct = multiply(c.matrix, conjugate(a));   // antilinear matrix of C o T
    const CMatrix jt = multiply(j.matrix, conjugate(a));   // antilinear matrix of J o T
    const CMatrix tstarj = multiply(ah, j.matrix);         // antilinear matrix of T* o J
    if (bplus.cols() > 0) {
        CMatrix cb = conjugate(bplus);
        rep.residuals["c_CT_eq_JT"] = frobenius_distance(multiply(ct, cb), multiply(jt, cb));
        rep.residuals["d_CT_eq_TstarJ"] =
            frobenius_distance(multiply(ct, cb), multiply(tstarj, cb));
        rep.notes = "commuting-fixed subspace dim " + std::to_string(bplus.cols()) + " of " +
                    std::to_string(a.rows());
    } else {
        rep.residuals["c_CT_eq_JT"] = 0.0;
        rep.residuals["d_CT_eq_TstarJ"] = 0.0;
        rep.notes = "commuting-fixed subspace is trivial; (c), (d) hold vacuously";
    }
    // The unrestricted residual of (d) is generically nonzero even under the
    // hypotheses; reported for transparency, not gated.
    rep.notes += "; unrestricted d-residual " + fmt(frobenius_distance(ct, tstarj));

    rep.passed = true;
    for (const auto& [key, r] : rep.residuals)
        if (r > tol.identity_tol) rep.passed = false;
    return rep;
}

VerificationReport verify_remark_2_6(const CMatrix& a, const Conjugation& c, const Conjugation& j,
                                     const ToleranceConfig& tol) {
    tol.validate();
    require_square(a, "verify_remark_2_6");
    require_csym(a, c, tol.identity_tol, "verify_remark_2_6");
    require_csym(a, j, tol.identity_tol, "verify_remark_2_6");
    require_commuting(c, j, tol, "verify_remark_2_6");

    VerificationReport rep;
    rep.name = "R2.6";
    rep.parameters["dim"] = std::to_string(a.rows());
    rep.parameters["C"] = c.label;
    rep.parameters["J"] = j.label;

    CMatrix beta = joint_fixed_basis(c, j, tol);
    if (beta.cols() == 0) {
        rep.residuals["gram_transpose"] = 0.0;
        rep.notes = "jointly fixed subspace is trivial; identity holds vacuously";
        rep.passed = true;
        return rep;
    }
    // G[n,m] = <T f_m, f_n>; H[n,m] = <(T o J) f_m, f_n> with T o J antilinear
    // of matrix A * M_J.
    CMatrix gram_t = multiply(adjoint(beta), multiply(a, beta));
    CMatrix gram_tj = multiply(adjoint(beta), antilinear_columns(multiply(a, j.matrix), beta));
    rep.residuals["gram_transpose"] = frobenius_distance(gram_t, transpose(gram_tj));
    rep.notes = "basis columns " + std::to_string(beta.cols()) + " of " + std::to_string(a.rows());
    rep.passed = rep.residuals["gram_transpose"] <= tol.identity_tol;
    return rep;
}

VerificationReport verify_converse(const CMatrix& a, const Conjugation& c, const Conjugation& j,
                                   const ToleranceConfig& tol) {
    tol.validate();
    require_square(a, "verify_converse");
    double r_c = csym_residual(a, c);
    double r_j = csym_residual(a, j);
    if (r_c > tol.identity_tol)
        throw std::invalid_argument("verify_converse: not " + c.label + "-symmetric (residual " +
                                    fmt(r_c) + ")");
    if (r_j > tol.identity_tol)
        throw std::invalid_argument("verify_converse: not " + j.label + "-symmetric (residual " +
                                    fmt(r_j) + ")");

    VerificationReport rep;
    rep.name = "P-CONVERSE";
    rep.parameters["dim"] = std::to_string(a.rows());
    rep.parameters["C"] = c.label;
    rep.parameters["J"] = j.label;

    // The relation CT = T*J enters the proof as a full antilinear-operator
    // identity, so its unrestricted residual is what feeds the bound. It is
    // not a gate: commutation of the pair is the conclusion under test, and
    // a large relation residual simply loosens the implied bound.
    double relation = frobenius_distance(multiply(c.matrix, conjugate(a)),
                                         multiply(adjoint(a), j.matrix));
    rep.residuals["relation"] = relation;

    double sigma = smallest_singular_value(a);
    rep.residuals["sigma_min"] = sigma;
    double rho = commutes(c, j, tol).residuals.at("commutator");
    rep.residuals["commutator"] = rho;
    rep.residuals["csym_C"] = r_c;
    rep.residuals["csym_J"] = r_j;

    if (sigma <= tol.injectivity_threshold) {
        rep.passed = false;
        rep.notes = "inconclusive: injectivity proxy failed (sigma_min " + fmt(sigma) + ")";
        return rep;
    }
    double bound = (r_c + r_j + relation) / sigma + tol.identity_tol;
    rep.residuals["commutator_bound"] = bound;
    rep.passed = rho <= bound;
    rep.notes = "amplification 1/sigma_min = " + fmt(1.0 / sigma);
    return rep;
}

VerificationReport verify_corollary_2_8(const Symbol& phi, const Conjugation& c,
                                        const Conjugation& j, std::size_t n,
                                        const ToleranceConfig& tol) {
    tol.validate();
    if (n < 2 * static_cast<std::size_t>(phi.bandwidth()) + 2)
        throw std::invalid_argument(
            "verify_corollary_2_8: dimension must be at least 2*bandwidth(phi) + 2 = " +
            std::to_string(2 * phi.bandwidth() + 2));
    CMatrix a = toeplitz_matrix(phi, n);
    double r_c = csym_residual(a, c);
    double r_j = csym_residual(a, j);
    if (r_c > tol.identity_tol)
        throw std::invalid_argument("verify_corollary_2_8: T_phi is not " + c.label +
                                    "-symmetric (residual " + fmt(r_c) + ")");
    if (r_j > tol.identity_tol)
        throw std::invalid_argument("verify_corollary_2_8: T_phi is not " + j.label +
                                    "-symmetric (residual " + fmt(r_j) + ")");

    VerificationReport rep;
    rep.name = "C2.8";
    rep.parameters["dim"] = std::to_string(n);
    rep.parameters["symbol"] = print_symbol(phi);
    rep.parameters["C"] = c.label;
    rep.parameters["J"] = j.label;

    double rho = commutes(c, j, tol).residuals.at("commutator");
    rep.residuals["commutator"] = rho;
    bool commute_side = rho <= tol.identity_tol;

    // The two directions of the equivalence are checked at the strength their
    // derivations carry. Forward (commuting implies the relation): on the
    // commuting-fixed subspace, where the fixed-basis argument lives.
    // Backward (relation implies commuting): with the relation read as the
    // unrestricted operator identity, which is what the injectivity argument
    // consumes.
    const CMatrix ct = multiply(c.matrix, conjugate(a));
    const CMatrix tstarj = multiply(adjoint(a), j.matrix);
    double relation_full = frobenius_distance(ct, tstarj);
    rep.residuals["relation_full"] = relation_full;

    bool forward_ok = true;
    if (commute_side) {
        CMatrix bplus = commuting_fixed_subspace(c, j, tol);
        double restricted = 0.0;
        if (bplus.cols() > 0) {
            CMatrix cb = conjugate(bplus);
            restricted = frobenius_distance(multiply(ct, cb), multiply(tstarj, cb));
        }
        rep.residuals["relation"] = restricted;
        forward_ok = restricted <= tol.identity_tol;
    }
    bool backward_ok = (relation_full > tol.identity_tol) || commute_side;

    auto proxy_a = injectivity_proxy(a, tol);
    auto proxy_ah = injectivity_proxy(adjoint(a), tol);
    rep.notes = "injectivity proxy: sigma_min(T_phi) " + fmt(proxy_a.sigma_min) +
                ", sigma_min(T_phi*) " + fmt(proxy_ah.sigma_min) +
                "; a finite section can be singular even when the full operator is injective";

    rep.passed = forward_ok && backward_ok;
    return rep;
}

VerificationReport verify_intertwiner_rigidity(const Conjugation& c, const ToleranceConfig& tol) {
    tol.validate();
    CMatrix t = intertwiner_from_conjugation(c, tol);
    const std::size_t n = c.dim();

    VerificationReport rep;
    rep.name = "R2.3-rigidity";
    rep.parameters["dim"] = std::to_string(n);
    rep.parameters["C"] = c.label;

    double r_int = frobenius_distance(multiply(t, c.matrix), conjugate(t));
    double r_c1 = frobenius_distance(t, conjugate(t));
    double r_cc = frobenius_distance(multiply(t, c.matrix), multiply(c.matrix, conjugate(t)));
    double deviation = frobenius_distance(c.matrix, CMatrix::identity(n));
    rep.residuals["intertwining"] = r_int;
    rep.residuals["commute_with_c1"] = r_c1;
    rep.residuals["commute_with_c"] = r_cc;
    rep.residuals["deviation_from_c1"] = deviation;

    rep.passed = true;
    bool antecedent = false;
    if (r_c1 <= tol.identity_tol) {
        antecedent = true;
        if (deviation > r_c1 + r_int + tol.identity_tol) rep.passed = false;
    }
    if (r_cc <= tol.identity_tol) {
        antecedent = true;
        if (deviation > r_cc + r_int + tol.identity_tol) rep.passed = false;
    }
    rep.notes = antecedent ? "antecedent holds; deviation gated by commutation residual"
                           : "antecedent false; implication holds vacuously";
    return rep;
}

}  // namespace csym
