#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qca/errors.hpp"
#include "qca/gen.hpp"
#include "qca/golden.hpp"
#include "qca/seed.hpp"

using namespace qca;

namespace {

const IntMat kA2 = golden::a2_matrix();

TorusElement basis(const SkewFormPtr& f, ExpVec e) { return TorusElement::monomial(f, std::move(e)); }

QuantumSeed a2_seed() { return QuantumSeed::principal(kA2, {2, 2}, SkewForm::zero(2)); }

}  // namespace

TEST_CASE("principal quantization block matrix and compatibility") {
    SkewForm l0 = principal_lambda(kA2, {2, 2}, SkewForm::zero(2));
    IntMat expect = {{0, 0, -2, 0}, {0, 0, 0, -2}, {2, 0, 0, -2}, {0, 2, 2, 0}};
    CHECK(l0.entries() == expect);
    ExchangeData principal = ExchangeData::principal(kA2, {2, 2});
    CHECK(check_compatible(l0, principal.btilde()) == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("compatibility rejects a zero form and reports the failing entry") {
    ExchangeData principal = ExchangeData::principal(kA2, {1, 1});
    CHECK_THROWS_AS(check_compatible(SkewForm::zero(4), principal.btilde()), NotCompatible);
}

TEST_CASE("random principal quantizations recover d") {
    Rng rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        auto [b0, d] = random_skew_symmetrizable(rng, 3, 2, 3);
        SkewForm lam = random_skew_form(rng, 3, 2);
        SkewForm l0 = principal_lambda(b0, d, lam);
        CHECK(check_compatible(l0, ExchangeData::principal(b0, d).btilde()) == d);
    }
}

TEST_CASE("pair mutation: involutive, sign-independent, compatibility-preserving") {
    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        auto [b0, d] = random_skew_symmetrizable(rng, 3, 2, 3);
        SkewForm lam = random_skew_form(rng, 3, 2);
        CompatiblePair pair = CompatiblePair::make(principal_lambda(b0, d, lam),
                                                   ExchangeData::principal(b0, d).btilde());
        int k = static_cast<int>(rand_int(rng, 1, 3));
        CHECK(lambda_mutate(pair.lambda, pair.exchange, k, +1) == lambda_mutate(pair.lambda, pair.exchange, k, -1));
        CompatiblePair once = pair_mutate(pair, k);  // validates compatibility internally
        CompatiblePair twice = pair_mutate(once, k);
        CHECK(twice.lambda == pair.lambda);
        CHECK(twice.exchange.btilde() == pair.exchange.btilde());
    }
}

TEST_CASE("initial seed: cluster is the standard basis, frame monomials are basis monomials") {
    QuantumSeed s = a2_seed();
    const auto& f = s.initial_form();
    for (int j = 1; j <= 4; ++j) CHECK(s.cluster_var(j) == basis(f, unit_vec(4, j)));
    CHECK(s.monomial({0, 0, 0, 0}) == TorusElement::one(f));
    CHECK(s.monomial({2, 0, 1, 3}) == basis(f, {2, 0, 1, 3}));
    CHECK(s.monomial({-1, 2, 0, 1}) == basis(f, {-1, 2, 0, 1}));
    CHECK_THROWS_AS(s.monomial({-1, -1, 0, 0}), UnsupportedExponent);
    CHECK_THROWS_AS(s.monomial({-2, 0, 0, 0}), UnsupportedExponent);
}

TEST_CASE("one mutation step of the rank-2 seed") {
    QuantumSeed s = a2_seed();
    QuantumSeed t = s.mutate(1);
    // X'_1 = M(-e1+e3) + M(-e1+e2), both basis monomials at the start
    CHECK(t.cluster_var(1) == basis(s.initial_form(), {-1, 0, 1, 0}) + basis(s.initial_form(), {-1, 1, 0, 0}));
    CHECK(t.cluster_var(2) == s.cluster_var(2));
    CHECK(t.pair().exchange.btilde() == IntMat{{0, -1}, {1, 0}, {-1, 1}, {0, 1}});
}

TEST_CASE("seed mutation is involutive including the word") {
    Rng rng(59);
    for (int trial = 0; trial < 30; ++trial) {
        auto [b0, d] = random_skew_symmetrizable(rng, 3, 1, 2);
        QuantumSeed s = QuantumSeed::principal(b0, d, SkewForm::zero(3));
        MutationWord w = random_word(rng, 3, 2);
        QuantumSeed deep = s.mutate_word(w);
        int k = static_cast<int>(rand_int(rng, 1, 3));
        QuantumSeed back = deep.mutate(k).mutate(k);
        CHECK(back.pair().lambda == deep.pair().lambda);
        CHECK(back.pair().exchange.btilde() == deep.pair().exchange.btilde());
        CHECK(back.cluster() == deep.cluster());
        CHECK(back.word() == deep.word());
    }
}

TEST_CASE("division recovers a cluster variable from its exchange numerator") {
    QuantumSeed s = a2_seed();
    QuantumSeed t = s.mutate(1);
    TorusElement x1 = s.cluster_var(1);
    TorusElement numerator = x1 * t.cluster_var(1);
    CHECK(exact_left_divide(x1, numerator) == t.cluster_var(1));
}

TEST_CASE("quasi-commutation of cluster variables follows the mutated form") {
    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        auto [b0, d] = random_skew_symmetrizable(rng, 2, 2, 2);
        QuantumSeed s = QuantumSeed::principal(b0, d, SkewForm::zero(2)).mutate_word(random_word(rng, 2, 3));
        for (int i = 1; i <= s.m(); ++i) {
            for (int j = 1; j <= s.m(); ++j) {
                TorusElement lhs = s.cluster_var(i) * s.cluster_var(j);
                TorusElement rhs = (s.cluster_var(j) * s.cluster_var(i))
                                       .scaled(QLaurent::q_power(HalfInt(2 * s.pair().lambda.entry(i - 1, j - 1))));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("cluster variables are bar-invariant") {
    Rng rng(67);
    for (int trial = 0; trial < 15; ++trial) {
        auto [b0, d] = random_skew_symmetrizable(rng, 3, 1, 2);
        QuantumSeed s = QuantumSeed::principal(b0, d, SkewForm::zero(3)).mutate_word(random_word(rng, 3, 4));
        for (int j = 1; j <= s.n(); ++j) CHECK(torus_bar(s.cluster_var(j)) == s.cluster_var(j));
    }
}

TEST_CASE("frozen variables never change") {
    Rng rng(71);
    for (int trial = 0; trial < 15; ++trial) {
        auto [b0, d] = random_skew_symmetrizable(rng, 3, 1, 2);
        QuantumSeed s = QuantumSeed::principal(b0, d, SkewForm::zero(3)).mutate_word(random_word(rng, 3, 4));
        for (int j = s.n() + 1; j <= s.m(); ++j) CHECK(s.cluster_var(j) == basis(s.initial_form(), unit_vec(s.m(), j)));
    }
}

TEST_CASE("Yhat at the start and after one step") {
    QuantumSeed s = a2_seed();
    const auto& f = s.initial_form();
    // at the initial vertex: Yhat_j = X^{column j}
    CHECK(yhat_current(s, 1) == basis(f, {0, -1, 1, 0}));
    CHECK(yhat_current(s, 2) == basis(f, {1, 0, 0, 1}));

    QuantumSeed t = s.mutate(2);
    // direction k = 2: Yhat_{2} inverts
    CHECK(yhat_current(t, 2) == basis(f, {-1, 0, 0, -1}));
    // j = 1: b = b_{21} = -1 <= 0 case: Yhat_1 (1 + q^{-d_2/2} Yhat_2)
    TorusElement expect = basis(f, {0, -1, 1, 0}) *
                          (TorusElement::one(f) + basis(f, {1, 0, 0, 1}).scaled(QLaurent::q_power(HalfInt(-2))));
    CHECK(yhat_current(t, 1) == expect);
}

TEST_CASE("Yhat quasi-commutation where both elements exist") {
    Rng rng(73);
    int checked = 0;
    for (int trial = 0; trial < 25; ++trial) {
        auto [b0, d] = random_skew_symmetrizable(rng, 3, 1, 2);
        QuantumSeed s = QuantumSeed::principal(b0, d, SkewForm::zero(3)).mutate_word(random_word(rng, 3, 3));
        auto ys = yhats_by_recurrence(s);
        const auto& ex = s.pair().exchange;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (!ys[static_cast<size_t>(i)] || !ys[static_cast<size_t>(j)]) continue;
                TorusElement lhs = *ys[static_cast<size_t>(i)] * *ys[static_cast<size_t>(j)];
                TorusElement rhs = (*ys[static_cast<size_t>(j)] * *ys[static_cast<size_t>(i)])
                                       .scaled(QLaurent::q_power(HalfInt(2 * d[static_cast<size_t>(i)] * ex.entry(i, j))));
                CHECK(lhs == rhs);
                ++checked;
            }
        }
    }
    CHECK(checked > 50);  // the relation must actually have been exercised
}

TEST_CASE("raw frame mutation is sign-independent and matches the recurrence route") {
    QuantumSeed s = a2_seed();
    // c = column 1 of the matrix mutated in direction 2 (all entries >= 0).
    QuantumSeed t = s.mutate(2);
    ExpVec c = t.pair().exchange.column(0);
    for (auto x : c) CHECK(x >= 0);
    TorusElement plus = frame_mutation_raw(s, 2, +1, c);
    TorusElement minus = frame_mutation_raw(s, 2, -1, c);
    CHECK(plus == minus);
    CHECK(plus == yhat_current(t, 1));
}

TEST_CASE("extended quantizations with frozen rows are compatible") {
    Rng rng(79);
    for (int trial = 0; trial < 40; ++trial) {
        auto [b0, d] = random_skew_symmetrizable(rng, 2, 2, 2);
        const int r = static_cast<int>(rand_int(rng, 1, 2));
        IntMat extra(static_cast<size_t>(r), std::vector<std::int64_t>(2, 0));
        for (auto& row : extra)
            for (auto& x : row) x = rand_int(rng, -2, 2);
        IntMat lam13(2, std::vector<std::int64_t>(static_cast<size_t>(r), 0));
        for (auto& row : lam13)
            for (auto& x : row) x = rand_int(rng, -2, 2);
        SkewForm l0 = extended_compatible_lambda(b0, d, extra, random_skew_form(rng, 2, 2), lam13,
                                                 random_skew_form(rng, r, 2));
        IntMat btilde = ExchangeData::principal(b0, d).btilde();
        for (const auto& row : extra) btilde.push_back(row);
        CHECK(check_compatible(l0, btilde) == d);
        // and the seed machinery accepts it
        QuantumSeed s = QuantumSeed::initial(l0, btilde);
        CHECK_NOTHROW(s.mutate(1).mutate(2).mutate(1));
    }
}

TEST_CASE("seed cache returns the same seed for reduced words") {
    SeedCache cache(a2_seed());
    auto a = cache.at({2, 1, 1, 2});
    CHECK(a->word().empty());
    auto b = cache.at({2, 1});
    auto c = cache.at({2, 2, 2, 1});
    CHECK(b->cluster() == c->cluster());
    CHECK(b.get() == c.get());  // cache hit on the reduced form
}
