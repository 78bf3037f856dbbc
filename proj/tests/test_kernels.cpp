#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csym/kernels.hpp"
#include "csym/linalg.hpp"

using namespace csym;

// The parallel per-slot kernels distribute rows but keep each output entry's
// accumulation order identical to the serial reference, so those must agree
// exactly. Reductions use a different summation tree and only agree to
// roundoff.

TEST_CASE("per-slot kernels match the serial reference exactly") {
    for (std::size_t n : {1u, 2u, 7u, 32u, 65u}) {
        CMatrix a = random_gaussian(n, 100 + n);
        CMatrix b = random_gaussian(n, 200 + n);
        CHECK(multiply(a, b) == serial::multiply(a, b));
        CHECK(transpose(a) == serial::transpose(a));
        CHECK(conjugate(a) == serial::conjugate(a));
        CHECK(adjoint(a) == serial::adjoint(a));
        CHECK(add(a, b) == serial::add(a, b));
        CHECK(subtract(a, b) == serial::subtract(a, b));
        CHECK(scale(a, cplx(0.5, -2.0)) == serial::scale(a, cplx(0.5, -2.0)));

        CVector x(n);
        for (std::size_t k = 0; k < n; ++k) x[k] = a(k, n - 1 - k);
        CHECK(matvec(a, x) == serial::matvec(a, x));
    }
}

TEST_CASE("reductions match the serial reference to roundoff") {
    for (std::size_t n : {3u, 33u, 128u}) {
        CMatrix a = random_gaussian(n, 11 + n);
        CMatrix b = random_gaussian(n, 17 + n);
        double scale_ref = serial::frobenius_norm(a);
        CHECK(frobenius_norm(a) == doctest::Approx(scale_ref).epsilon(1e-13));
        CHECK(frobenius_distance(a, b) ==
              doctest::Approx(serial::frobenius_distance(a, b)).epsilon(1e-13));
    }
}

TEST_CASE("frobenius distance basics") {
    CMatrix i2 = CMatrix::identity(2);
    CMatrix z2(2, 2);
    CHECK(frobenius_distance(i2, i2) == 0.0);
    CHECK(frobenius_distance(i2, z2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    CMatrix d1 = CMatrix::diagonal({cplx(1, 0), cplx(2, 0)});
    CMatrix d2 = CMatrix::diagonal({cplx(1, 0), cplx(5, 0)});
    CHECK(frobenius_distance(d1, d2) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("shape mismatches are rejected") {
    CMatrix a(2, 3), b(3, 3);
    CHECK_THROWS_AS((void)add(a, b), dimension_error);
    CHECK_THROWS_AS((void)frobenius_distance(a, b), dimension_error);
    CHECK_THROWS_AS((void)multiply(b, a), dimension_error);
    CHECK_THROWS_AS((void)matvec(a, CVector(2)), dimension_error);
}

TEST_CASE("multiply against a hand-computed product") {
    CMatrix a(2, 2), b(2, 2);
    a(0, 0) = cplx(1, 1);
    a(0, 1) = cplx(0, 2);
    a(1, 0) = cplx(3, 0);
    a(1, 1) = cplx(-1, 0);
    b(0, 0) = cplx(0, 1);
    b(0, 1) = cplx(1, 0);
    b(1, 0) = cplx(2, 0);
    b(1, 1) = cplx(0, -1);
    CMatrix c = multiply(a, b);
    CHECK(c(0, 0) == cplx(-1, 5));
    CHECK(c(0, 1) == cplx(3, 1));
    CHECK(c(1, 0) == cplx(-2, 3));
    CHECK(c(1, 1) == cplx(3, 1));
}
