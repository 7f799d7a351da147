#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "qca/exchange.hpp"
#include "qca/torus.hpp"

namespace qca {

/// Deterministic instance generation for the randomized verification suites.
/// Everything is a pure function of the engine state passed in.
using Rng = std::mt19937_64;

std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Skew-symmetric n x n matrix with entries in [-max_abs, max_abs].
IntMat random_skew_symmetric(Rng& rng, int n, std::int64_t max_abs);

/// Skew-symmetrizable (B, d): d entries in [1, max_d], pairs scaled so that
/// d_i b_ij = -d_j b_ji holds with small integer entries.
std::pair<IntMat, std::vector<std::int64_t>> random_skew_symmetrizable(Rng& rng, int n, std::int64_t max_c,
                                                                       std::int64_t max_d);

/// Skew-symmetric n x n form with entries in [-max_abs, max_abs].
SkewForm random_skew_form(Rng& rng, int n, std::int64_t max_abs);

/// Uniform word of the given length over directions [1, n].
MutationWord random_word(Rng& rng, int n, int length);

/// A matrix mutation-equivalent to the linear A_n matrix (random word applied
/// to it); entries stay in {0, 1, -1}.
IntMat random_type_a_matrix(Rng& rng, int n, int mutations);

/// The linear A_n matrix: b_{i,i+1} = 1, b_{i+1,i} = -1.
IntMat linear_a_matrix(int n);

}  // namespace qca
