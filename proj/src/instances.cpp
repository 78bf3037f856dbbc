#include "csym/instances.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "csym/kernels.hpp"

namespace csym {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
    std::uint64_t x = base + 0x9e3779b97f4a7c15ULL * (salt + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

cplx random_unimodular(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uang(0.0, 2.0 * std::numbers::pi);
    double theta = uang(rng);
    return cplx(std::cos(theta), std::sin(theta));
}

CommutingPair commuting_pair(std::size_t n, std::uint64_t seed, int kind) {
    switch (kind % 3) {
        case 0: {
            cplx lambda = random_unimodular(mix_seed(seed, 11));
            return {family_conjugation(lambda, n), family_conjugation(lambda, n)};
        }
        case 1: {
            cplx lambda = random_unimodular(mix_seed(seed, 13));
            return {family_conjugation(lambda, n), family_conjugation(-lambda, n)};
        }
        default: {
            CMatrix u = random_unitary(n, mix_seed(seed, 17));
            std::mt19937_64 rng(mix_seed(seed, 19));
            CVector signs(n);
            for (std::size_t k = 0; k < n; ++k)
                signs[k] = (rng() & 1u) ? cplx(1.0, 0.0) : cplx(-1.0, 0.0);
            CMatrix ut = transpose(u);
            Conjugation c{multiply(u, ut), "pair-C:" + std::to_string(seed)};
            Conjugation j{multiply(multiply(u, CMatrix::diagonal(signs)), ut),
                          "pair-J:" + std::to_string(seed)};
            return {std::move(c), std::move(j)};
        }
    }
}

DoublySymmetricInstance doubly_symmetric_instance(std::size_t n, std::uint64_t base_seed,
                                                  std::uint64_t trial) {
    std::uint64_t s = mix_seed(base_seed, trial);
    CommutingPair pair = commuting_pair(n, s, static_cast<int>(trial % 3));
    CMatrix a = make_doubly_symmetric(random_gaussian(n, mix_seed(s, 23)), pair.c, pair.j);
    return {std::move(a), std::move(pair.c), std::move(pair.j)};
}

Symbol family_symmetric_symbol(cplx lambda, int max_bandwidth, std::uint64_t seed,
                               bool even_only) {
    if (max_bandwidth < 1) throw std::invalid_argument("family_symmetric_symbol: bandwidth >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Symbol phi;
    double re0 = gauss(rng);
    phi.add_term(0, cplx(re0, 0.0));  // degree 0 is unconstrained; keep it real-leaning
    int step = even_only ? 2 : 1;
    cplx power(1.0, 0.0);
    int last = 0;
    for (int m = step; m <= max_bandwidth; m += step) {
        while (last < m) {
            power *= lambda;
            ++last;
        }
        cplx g(gauss(rng), gauss(rng));
        phi.add_term(m, g);
        phi.add_term(-m, g * power);
    }
    return phi;
}

Symbol random_symbol(int max_bandwidth, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Symbol phi;
    for (int m = -max_bandwidth; m <= max_bandwidth; ++m) {
        if ((rng() & 3u) == 0u) continue;  // leave some degrees empty
        phi.add_term(m, cplx(gauss(rng), gauss(rng)));
    }
    return phi;
}

VerificationReport example_report(std::size_t n, const ToleranceConfig& tol) {
    tol.validate();
    Symbol phi = parse_symbol("z^2 + zbar^2");
    if (n < 2 * static_cast<std::size_t>(phi.bandwidth()) + 2)
        throw std::invalid_argument("example_report: dimension must be at least 6");
    CMatrix a = toeplitz_matrix(phi, n);
    Conjugation c1 = c1_conjugation(n);
    Conjugation cm1 = family_conjugation(cplx(-1.0, 0.0), n);

    VerificationReport rep;
    rep.name = "EX";
    rep.parameters["dim"] = std::to_string(n);
    rep.parameters["symbol"] = print_symbol(phi);
    rep.residuals["csym_c1"] = csym_residual(a, c1);
    rep.residuals["csym_cminus1"] = csym_residual(a, cm1);
    rep.residuals["commute"] = commutes(c1, cm1, tol).residuals.at("commutator");

    // T_phi = C1 T_phi* C_{-1}: the right side is linear with matrix
    // M_C A^t conj(M_J); the identity holds on the commuting-fixed subspace.
    CMatrix rhs = multiply(multiply(c1.matrix, transpose(a)), conjugate(cm1.matrix));
    CMatrix bplus = commuting_fixed_subspace(c1, cm1, tol);
    rep.residuals["factorization"] =
        frobenius_distance(multiply(a, bplus), multiply(rhs, bplus));
    rep.notes = "factorization checked on the commuting-fixed subspace, dim " +
                std::to_string(bplus.cols()) + " of " + std::to_string(n);

    rep.passed = true;
    for (const auto& [key, r] : rep.residuals)
        if (r > tol.identity_tol) rep.passed = false;
    return rep;
}

}  // namespace csym
