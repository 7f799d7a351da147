#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qca/classical.hpp"
#include "qca/errors.hpp"
#include "qca/gen.hpp"
#include "qca/golden.hpp"

using namespace qca;

namespace {

const IntMat kA2 = golden::a2_matrix();

CommPoly upoly(int n, std::vector<std::pair<std::vector<std::int64_t>, int>> terms) {
    CommPoly p(n);
    for (auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("matrix mutation reproduces the rank-2 reference family") {
    ExchangeData b = ExchangeData::principal(kA2, {2, 2});
    for (const auto& row : golden::a2_rows()) {
        CHECK(matrix_mutate_word(b, row.word).btilde() == row.btilde);
    }
}

TEST_CASE("matrix mutation is involutive") {
    Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        auto [b0, d] = random_skew_symmetrizable(rng, 4, 2, 3);
        ExchangeData b = ExchangeData::principal(b0, d);
        int k = static_cast<int>(rand_int(rng, 1, 4));
        CHECK(matrix_mutate(matrix_mutate(b, k), k).btilde() == b.btilde());
    }
}

TEST_CASE("mutation rejects out-of-range directions") {
    ExchangeData b(kA2, {1, 1});
    CHECK_THROWS_AS(matrix_mutate(b, 0), BadDirection);
    CHECK_THROWS_AS(matrix_mutate(b, 3), BadDirection);
}

TEST_CASE("skew-symmetrizer search") {
    CHECK(find_skew_symmetrizer(kA2) == std::vector<std::int64_t>{1, 1});
    CHECK(find_skew_symmetrizer(IntMat{{0, 1}, {-2, 0}}) == std::vector<std::int64_t>{2, 1});
    CHECK(find_skew_symmetrizer(IntMat{{0, 1}, {1, 0}}) == std::nullopt);
    // inconsistent ratio cycle
    CHECK(find_skew_symmetrizer(IntMat{{0, 1, -1}, {-2, 0, 1}, {1, -1, 0}}) == std::nullopt);
    CHECK_THROWS_AS(ExchangeData(IntMat{{0, 1, -1}, {-2, 0, 1}, {1, -1, 0}}), NotSkewSymmetrizable);
    CHECK_THROWS_AS(ExchangeData(kA2, {1, 2}), NotSkewSymmetrizable);
}

TEST_CASE("polynomial exact division round-trips and rejects inexact input") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        CommPoly a(2), b(2);
        for (int t = 0; t < 3; ++t) {
            a.add_term({rand_int(rng, 0, 3), rand_int(rng, 0, 3)}, Int(rand_int(rng, -4, 4)));
            b.add_term({rand_int(rng, 0, 3), rand_int(rng, 0, 3)}, Int(rand_int(rng, -4, 4)));
        }
        if (b.is_zero()) continue;
        CHECK(comm_exact_div(a * b, b) == a);
    }
    CommPoly u1 = CommPoly::variable(2, 1), one = CommPoly::one(2);
    CHECK_THROWS_AS(comm_exact_div(u1, u1 + one), InexactDivision);
    CHECK_THROWS_AS(comm_exact_div(one, CommPoly(2)), InexactDivision);
}

TEST_CASE("F-polynomials: initial conditions, one step, and the rank-2 family") {
    auto f0 = classical_f_polys(kA2, {});
    CHECK(f0[0].is_one());
    CHECK(f0[1].is_one());

    // one step in direction k gives F_k = u_k + 1
    for (int k = 1; k <= 2; ++k) {
        auto f = classical_f_polys(kA2, {k});
        CHECK(f[static_cast<size_t>(k - 1)] == upoly(2, {{{k == 1 ? 1 : 0, k == 2 ? 1 : 0}, 1}, {{0, 0}, 1}}));
        CHECK(f[static_cast<size_t>(2 - k)].is_one());
    }

    auto f21 = classical_f_polys(kA2, {2, 1});
    CHECK(f21[0] == upoly(2, {{{1, 1}, 1}, {{1, 0}, 1}, {{0, 0}, 1}}));

    // every row of the reference family at q = 1
    for (const auto& row : golden::a2_rows()) {
        auto f = classical_f_polys(kA2, row.word);
        for (int j = 0; j < 2; ++j) {
            CommPoly expect(2);
            for (const auto& [e, twice] : (j == 0 ? row.f1 : row.f2)) expect.add_term(e, 1);
            CHECK(f[static_cast<size_t>(j)] == expect);
        }
    }
}

TEST_CASE("g-vectors: initial, reference values, and sign independence") {
    auto g0 = g_vectors(kA2, {});
    CHECK(g0[0] == GVec{1, 0});
    CHECK(g0[1] == GVec{0, 1});
    CHECK(g_vectors(kA2, {2, 1})[0] == GVec{-1, 0});
    CHECK(g_vectors(kA2, {2, 1, 2})[1] == GVec{-1, 1});
    for (const auto& row : golden::a2_rows()) {
        auto g = g_vectors(kA2, row.word);
        CHECK(g[0] == row.g1);
        CHECK(g[1] == row.g2);
    }
    // the epsilon check runs inside; exercise it over random skew-symmetrizable input
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto [b0, d] = random_skew_symmetrizable(rng, 3, 2, 3);
        CHECK_NOTHROW(g_vectors(b0, random_word(rng, 3, 5)));
    }
}

TEST_CASE("extended g-vectors: frozen rows stay units, principal case matches") {
    ExchangeData principal = ExchangeData::principal(kA2, {1, 1});
    auto ge = extended_g_vectors(principal, {});
    for (int l = 0; l < 4; ++l) CHECK(ge[static_cast<size_t>(l)] == unit_vec(4, l + 1));

    auto g21 = extended_g_vectors(principal, {2, 1});
    CHECK(g21[0] == GVec{-1, 0, 0, 0});
    // frozen indices never move
    CHECK(g21[2] == unit_vec(4, 3));
    CHECK(g21[3] == unit_vec(4, 4));

    // with no frozen rows the extended recurrence is the plain one
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        auto [b0, d] = random_skew_symmetrizable(rng, 3, 2, 2);
        MutationWord w = random_word(rng, 3, 5);
        ExchangeData square(b0, d);
        auto lhs = extended_g_vectors(square, w);
        auto rhs = g_vectors(b0, w);
        for (int j = 0; j < 3; ++j) CHECK(lhs[static_cast<size_t>(j)] == rhs[static_cast<size_t>(j)]);
    }

    // principal case agrees with the plain g-vectors in the top half, zero bottom
    for (int trial = 0; trial < 50; ++trial) {
        auto [b0, d] = random_skew_symmetrizable(rng, 3, 2, 2);
        MutationWord w = random_word(rng, 3, 5);
        auto lhs = extended_g_vectors(ExchangeData::principal(b0, d), w);
        auto rhs = g_vectors(b0, w);
        for (int j = 0; j < 3; ++j) {
            for (int c = 0; c < 3; ++c) {
                CHECK(lhs[static_cast<size_t>(j)][static_cast<size_t>(c)] == rhs[static_cast<size_t>(j)][static_cast<size_t>(c)]);
                CHECK(lhs[static_cast<size_t>(j)][static_cast<size_t>(c + 3)] == 0);
            }
        }
    }
}

TEST_CASE("denominator vectors: initial, one step, and the rank-4 example") {
    auto d0 = denominator_vectors(kA2, {});
    CHECK(d0[0] == DVec{-1, 0});
    CHECK(d0[1] == DVec{0, -1});
    CHECK(denominator_vectors(kA2, {1})[0] == DVec{1, 0});
    CHECK(denominator_vectors(kA2, {2})[1] == DVec{0, 1});
    CHECK(denominator_vectors(golden::a4_matrix(), {2, 3, 4})[3] == DVec{0, 1, 1, 1});
}

TEST_CASE("every recurrence is stable under appending k,k") {
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        auto [b0, d] = random_skew_symmetrizable(rng, 3, 1, 2);
        MutationWord w = random_word(rng, 3, static_cast<int>(rand_int(rng, 0, 4)));
        MutationWord wkk = w;
        int k = static_cast<int>(rand_int(rng, 1, 3));
        wkk.push_back(k);
        wkk.push_back(k);
        ExchangeData principal = ExchangeData::principal(b0, d);
        CHECK(matrix_mutate_word(principal, w).btilde() == matrix_mutate_word(principal, wkk).btilde());
        CHECK(classical_f_polys(b0, w) == classical_f_polys(b0, wkk));
        CHECK(g_vectors(b0, w) == g_vectors(b0, wkk));
        CHECK(denominator_vectors(b0, w) == denominator_vectors(b0, wkk));
        CHECK(extended_g_vectors(principal, w) == extended_g_vectors(principal, wkk));
    }
}

TEST_CASE("u_j never divides a computed F-polynomial and constant terms are 1") {
    Rng rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        IntMat b0 = random_skew_symmetric(rng, 3, 1);
        MutationWord w = random_word(rng, 3, 5);
        for (const CommPoly& f : classical_f_polys(b0, w)) {
            CHECK(f.constant_term() == 1);  // implies no u_j divides f
        }
    }
}

TEST_CASE("word reduction cancels adjacent duplicates") {
    CHECK(reduced_word({1, 2, 2, 1}) == MutationWord{});
    CHECK(reduced_word({1, 2, 1, 1, 2, 2, 1}) == MutationWord{1, 2, 1});
    CHECK(reduced_word({2, 1, 2}) == MutationWord{2, 1, 2});
    CHECK(reduced_word({}) == MutationWord{});
}
