#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csym/instances.hpp"
#include "csym/kernels.hpp"
#include "csym/toeplitz.hpp"

using namespace csym;

namespace {

// Independent construction: column k of the truncation is P(phi * z^k) with
// negative degrees dropped, read off by polynomial multiplication.
CMatrix toeplitz_by_multiplication(const Symbol& phi, std::size_t n) {
    CMatrix a(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (const auto& [deg, c] : phi.coefficients()) {
            long out = static_cast<long>(k) + deg;
            if (out >= 0 && out < static_cast<long>(n)) a(static_cast<std::size_t>(out), k) += c;
        }
    }
    return a;
}

}  // namespace

TEST_CASE("toeplitz truncations of the worked symbols") {
    CHECK(toeplitz_matrix(parse_symbol("1"), 5) == CMatrix::identity(5));

    CMatrix shift = toeplitz_matrix(parse_symbol("z"), 3);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(shift(j, k) == ((j == k + 1) ? cplx(1, 0) : cplx(0, 0)));

    CMatrix a = toeplitz_matrix(parse_symbol("z^2 + zbar^2"), 4);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) {
            bool on_band = (j + 2 == k) || (k + 2 == j);
            CHECK(a(j, k) == (on_band ? cplx(1, 0) : cplx(0, 0)));
        }

    CHECK_THROWS_AS((void)toeplitz_matrix(parse_symbol("z"), 0), dimension_error);
}

TEST_CASE("entries depend only on the diagonal and sections nest") {
    for (int which = 0; which < 12; ++which) {
        Symbol phi = random_symbol(4, 500 + which);
        CMatrix a = toeplitz_matrix(phi, 12);
        for (std::size_t j = 0; j < 12; ++j)
            for (std::size_t k = 0; k < 12; ++k)
                CHECK(a(j, k) == phi.coefficient(static_cast<int>(j) - static_cast<int>(k)));

        CMatrix small = toeplitz_matrix(phi, 7);
        for (std::size_t j = 0; j < 7; ++j)
            for (std::size_t k = 0; k < 7; ++k) CHECK(small(j, k) == a(j, k));

        CHECK(frobenius_distance(a, toeplitz_by_multiplication(phi, 12)) == 0.0);
    }
}

TEST_CASE("csym residual: canonical identities") {
    std::size_t n = 8;
    CMatrix a = toeplitz_matrix(parse_symbol("z^2 + zbar^2"), n);
    CHECK(csym_residual(a, c1_conjugation(n)) == 0.0);
    CHECK(csym_residual(a, family_conjugation(cplx(-1, 0), n)) == 0.0);

    // for C1 the residual is exactly the transpose asymmetry
    for (int which = 0; which < 10; ++which) {
        CMatrix r = random_gaussian(9, 700 + which);
        double lhs = csym_residual(r, c1_conjugation(9));
        double rhs = frobenius_distance(r, transpose(r));
        CHECK(lhs == rhs);
    }

    CHECK_THROWS_AS((void)csym_residual(a, c1_conjugation(4)), dimension_error);
}

TEST_CASE("family symmetry of a truncation reduces to coefficient relations") {
    // For diagonal conjugations, C-symmetry of the truncation holds iff
    // phihat(-m) = phihat(m) * lambda^m over the captured band; check the
    // residual against a direct enumeration of that condition.
    for (int which = 0; which < 20; ++which) {
        cplx lambda = random_unimodular(800 + which);
        Symbol phi = (which % 2 == 0) ? family_symmetric_symbol(lambda, 3, 40 + which, false)
                                      : random_symbol(3, 40 + which);
        std::size_t n = 10;
        CMatrix a = toeplitz_matrix(phi, n);
        double residual = csym_residual(a, family_conjugation(lambda, n));

        bool coeffs_ok = true;
        for (int m = 1; m <= phi.bandwidth(); ++m) {
            cplx p(1.0, 0.0);
            for (int t = 0; t < m; ++t) p *= lambda;
            if (std::abs(phi.coefficient(-m) - phi.coefficient(m) * p) > 1e-12) coeffs_ok = false;
        }
        CHECK((residual <= 1e-12) == coeffs_ok);
    }
}

TEST_CASE("injectivity proxy") {
    auto id = injectivity_proxy(CMatrix::identity(4));
    CHECK(id.injective);
    CHECK(id.sigma_min == doctest::Approx(1.0).epsilon(1e-14));

    auto zero = injectivity_proxy(CMatrix(3, 3));
    CHECK_FALSE(zero.injective);
    CHECK(zero.sigma_min == 0.0);

    CMatrix a = toeplitz_matrix(parse_symbol("z^2 + zbar^2"), 8);
    auto proxy = injectivity_proxy(a);
    CHECK(proxy.sigma_min == doctest::Approx(smallest_singular_value(a)).epsilon(1e-15));
}
