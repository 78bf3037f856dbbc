#pragma once

#include <cstdint>

#include "csym/theorems.hpp"

namespace csym {

// Deterministic generators for randomized verification sweeps. Every
// generator is a pure function of (dimension, seed), so sweeps reproduce
// bit-identically for a fixed base seed.

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt);

/// Uniform point on the unit circle.
cplx random_unimodular(std::uint64_t seed);

struct CommutingPair {
    Conjugation c;
    Conjugation j;
};

/// Commuting pairs cycle through three constructions by kind:
///   0  (C_lambda, C_lambda)
///   1  (C_lambda, C_{-lambda})
///   2  (U U^t, U E U^t) for Haar U and a random sign diagonal E
CommutingPair commuting_pair(std::size_t n, std::uint64_t seed, int kind);

struct DoublySymmetricInstance {
    CMatrix a;
    Conjugation c;
    Conjugation j;
};

/// Doubly symmetric operator over a commuting pair; kind = trial % 3.
DoublySymmetricInstance doubly_symmetric_instance(std::size_t n, std::uint64_t base_seed,
                                                  std::uint64_t trial);

/// Random Laurent symbol whose Toeplitz truncations are C_lambda-symmetric:
/// coefficients satisfy phihat(-m) = phihat(m) * lambda^m. With even_only the
/// support is restricted to even degrees, which makes the symbol
/// C_{-lambda}-symmetric as well.
Symbol family_symmetric_symbol(cplx lambda, int max_bandwidth, std::uint64_t seed, bool even_only);

/// Uniform random Laurent symbol with bandwidth <= max_bandwidth (no symmetry).
Symbol random_symbol(int max_bandwidth, std::uint64_t seed);

/// The worked Toeplitz example: phi = z^2 + zbar^2 against the pair
/// (C_1, C_{-1}); checks both symmetries and the factorization
/// T_phi = C_1 T_phi* C_{-1} on the commuting-fixed subspace.
VerificationReport example_report(std::size_t n, const ToleranceConfig& tol = {});

}  // namespace csym
