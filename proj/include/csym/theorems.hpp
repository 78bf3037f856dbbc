#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csym/conjugation.hpp"
#include "csym/symbol.hpp"
#include "csym/toeplitz.hpp"

namespace csym {

enum class TheoremId { T2_1, P2_2, R2_3, C2_4, T2_5, R2_6, EX, P_CONVERSE, C2_8 };

std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);
std::vector<TheoremId> all_theorems();

struct TheoremCheck {
    TheoremId id;
    VerificationReport report;
};

/// Unitary T with T f_k = e_k for a C-fixed orthonormal basis {f_k}; realizes
/// the antilinear intertwining T C = C1 T, i.e. T * M_C = conj(T).
CMatrix intertwiner_from_conjugation(const Conjugation& c, const ToleranceConfig& tol = {});

/// Inverse direction: C = T* C1 T, with matrix M = T* conj(T). Requires T
/// unitary (the operational form of carrying an orthonormal basis onto one).
Conjugation conjugation_from_isomorphism(const CMatrix& t, const ToleranceConfig& tol = {});

/// T A T*; unitary similarity, so the spectrum is preserved, and it carries
/// C-symmetry to plain matrix symmetry when T intertwines C with C1.
CMatrix transport_operator(const CMatrix& a, const CMatrix& t, const ToleranceConfig& tol = {});

/// C1-symmetry of A versus symmetry of its canonical matrix: the two
/// residuals agree as an algebraic identity, for arbitrary A.
VerificationReport check_symmetric_equivalence(const CMatrix& a, const ToleranceConfig& tol = {});

/// Linear symmetrizer whose fixed points are exactly the C-symmetric
/// matrices: S_C(A) = M_C * A^t * conj(M_C). An involution.
CMatrix symmetrize(const CMatrix& a, const Conjugation& c);

/// Averages A over the symmetrizers of a commuting pair; the result is both
/// C- and J-symmetric. Throws if C and J do not commute.
CMatrix make_doubly_symmetric(const CMatrix& a, const Conjugation& c, const Conjugation& j,
                              const ToleranceConfig& tol = {});

/// Orthonormal basis (columns) of the commuting-fixed subspace ker(CJ - I).
/// For commuting conjugations CJ is a unitary Hermitian involution, so this
/// is the +1 eigenspace; it is where C and J agree as antilinear maps. May
/// have zero columns.
CMatrix commuting_fixed_subspace(const Conjugation& c, const Conjugation& j,
                                 const ToleranceConfig& tol = {});

/// Jointly C- and J-fixed orthonormal vectors: a fixed basis of the
/// restriction of C to ker(CJ - I), mapped back to the ambient space.
CMatrix joint_fixed_basis(const Conjugation& c, const Conjugation& j,
                          const ToleranceConfig& tol = {});

/// The four identities of the commuting-pair theorem, each checked where its
/// derivation lives: (a) T*C = JTJ on C-fixed vectors, (b) T*J = CTC on
/// J-fixed vectors, (c) CT = JT and (d) CT = T*J on the commuting-fixed
/// subspace. As unrestricted matrix identities (a)-(d) are generically false
/// even under the hypotheses; the canonical-matrix gap of (d) is recorded in
/// the notes.
VerificationReport verify_theorem_2_5(const CMatrix& a, const Conjugation& c, const Conjugation& j,
                                      const ToleranceConfig& tol = {});

/// Gram-matrix transpose identity [T]_beta = [TJ]_beta^t over a jointly fixed
/// basis beta, with TJ applied via the antilinear composition rules.
VerificationReport verify_remark_2_6(const CMatrix& a, const Conjugation& c, const Conjugation& j,
                                     const ToleranceConfig& tol = {});

/// Converse direction: given the symmetries, the relation CT = T*J and
/// injectivity force CJ = JC. The commutator residual is gated by the input
/// residuals amplified by 1/sigma_min(T); reports "inconclusive" instead of
/// pass/fail when the injectivity proxy fails.
VerificationReport verify_converse(const CMatrix& a, const Conjugation& c, const Conjugation& j,
                                   const ToleranceConfig& tol = {});

/// Toeplitz equivalence: relation residual (on the commuting-fixed subspace)
/// and commutator residual must agree as truth values at identity_tol.
VerificationReport verify_corollary_2_8(const Symbol& phi, const Conjugation& c,
                                        const Conjugation& j, std::size_t n,
                                        const ToleranceConfig& tol = {});

/// If the intertwiner of C commutes with C1 or with C, then C = C1; checked
/// as a residual implication with the amplification made explicit.
VerificationReport verify_intertwiner_rigidity(const Conjugation& c,
                                               const ToleranceConfig& tol = {});

}  // namespace csym
