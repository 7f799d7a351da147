#include "qca/gen.hpp"

#include <numeric>

namespace qca {

std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

IntMat random_skew_symmetric(Rng& rng, int n, std::int64_t max_abs) {
    IntMat b(static_cast<size_t>(n), std::vector<std::int64_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::int64_t v = rand_int(rng, -max_abs, max_abs);
            b[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            b[static_cast<size_t>(j)][static_cast<size_t>(i)] = -v;
        }
    }
    return b;
}

std::pair<IntMat, std::vector<std::int64_t>> random_skew_symmetrizable(Rng& rng, int n, std::int64_t max_c,
                                                                       std::int64_t max_d) {
    std::vector<std::int64_t> d(static_cast<size_t>(n));
    for (auto& x : d) x = rand_int(rng, 1, max_d);
    IntMat b(static_cast<size_t>(n), std::vector<std::int64_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // b_ij = c * d_j / g, b_ji = -c * d_i / g keeps d_i b_ij = -d_j b_ji.
            std::int64_t g = std::gcd(d[static_cast<size_t>(i)], d[static_cast<size_t>(j)]);
            std::int64_t c = rand_int(rng, -max_c, max_c);
            b[static_cast<size_t>(i)][static_cast<size_t>(j)] = c * d[static_cast<size_t>(j)] / g;
            b[static_cast<size_t>(j)][static_cast<size_t>(i)] = -c * d[static_cast<size_t>(i)] / g;
        }
    }
    return {std::move(b), std::move(d)};
}

SkewForm random_skew_form(Rng& rng, int n, std::int64_t max_abs) {
    return SkewForm(random_skew_symmetric(rng, n, max_abs));
}

MutationWord random_word(Rng& rng, int n, int length) {
    MutationWord w(static_cast<size_t>(length));
    for (auto& k : w) k = static_cast<int>(rand_int(rng, 1, n));
    return w;
}

IntMat linear_a_matrix(int n) {
    IntMat b(static_cast<size_t>(n), std::vector<std::int64_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i + 1 < n; ++i) {
        b[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = 1;
        b[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1;
    }
    return b;
}

IntMat random_type_a_matrix(Rng& rng, int n, int mutations) {
    ExchangeData b(linear_a_matrix(n), std::vector<std::int64_t>(static_cast<size_t>(n), 1));
    for (int s = 0; s < mutations; ++s) b = matrix_mutate(b, static_cast<int>(rand_int(rng, 1, n)));
    return b.btilde();
}

}  // namespace qca
