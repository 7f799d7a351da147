#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qca/qlaurent.hpp"

using namespace qca;

namespace {

QLaurent q(std::int64_t twice, std::int64_t c = 1) { return QLaurent::q_power(HalfInt(twice), Int(c)); }

QLaurent random_qlaurent(std::mt19937_64& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::int64_t> exp(-6, 6), coeff(-5, 5);
    QLaurent out;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) out += q(exp(rng), coeff(rng));
    return out;
}

}  // namespace

TEST_CASE("multiplication expands products of half powers") {
    // (q^{1/2} + 1)(q^{-1/2} + 1) = q^{1/2} + q^{-1/2} + 2
    QLaurent a = q(1) + q(0);
    QLaurent b = q(-1) + q(0);
    CHECK(a * b == q(1) + q(-1) + q(0, 2));
}

TEST_CASE("one is the multiplicative identity and zero annihilates") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        QLaurent x = random_qlaurent(rng);
        CHECK(x * QLaurent(1) == x);
        CHECK((q(2) + q(0)) * QLaurent() == QLaurent());
    }
}

TEST_CASE("ring axioms hold on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        QLaurent a = random_qlaurent(rng), b = random_qlaurent(rng), c = random_qlaurent(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("product of nonzero elements is nonzero") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        QLaurent a = random_qlaurent(rng), b = random_qlaurent(rng);
        if (!a.is_zero() && !b.is_zero()) CHECK_FALSE((a * b).is_zero());
    }
}

TEST_CASE("bar involution conjugates exponents termwise") {
    CHECK(qlaurent_bar(q(3) + q(-1, 2)) == q(-3) + q(1, 2));
    CHECK(qlaurent_bar(QLaurent(5)) == QLaurent(5));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        QLaurent a = random_qlaurent(rng), b = random_qlaurent(rng);
        CHECK(qlaurent_bar(qlaurent_bar(a)) == a);
        CHECK(qlaurent_bar(a * b) == qlaurent_bar(a) * qlaurent_bar(b));
        CHECK(qlaurent_bar(a + b) == qlaurent_bar(a) + qlaurent_bar(b));
    }
}

TEST_CASE("evaluation at q = 1 sums coefficients and is a ring map") {
    CHECK(qlaurent_eval_one(q(1) + q(-1)) == 2);
    CHECK(qlaurent_eval_one(QLaurent()) == 0);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        QLaurent a = random_qlaurent(rng), b = random_qlaurent(rng);
        CHECK(qlaurent_eval_one(a * b) == qlaurent_eval_one(a) * qlaurent_eval_one(b));
        CHECK(qlaurent_eval_one(a + b) == qlaurent_eval_one(a) + qlaurent_eval_one(b));
    }
}

TEST_CASE("exact division inverts multiplication and rejects inexact input") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        QLaurent a = random_qlaurent(rng), b = random_qlaurent(rng);
        if (b.is_zero()) continue;
        CHECK(qlaurent_exact_div(a * b, b) == a);
    }
    CHECK_THROWS_AS(qlaurent_exact_div(QLaurent(1), q(0, 2)), NotDivisible);     // 1/2
    CHECK_THROWS_AS(qlaurent_exact_div(q(2) + q(0), q(1) + q(0)), NotDivisible);  // (q+1)/(q^{1/2}+1)
    CHECK_THROWS_AS(qlaurent_exact_div(QLaurent(1), QLaurent()), NotDivisible);
    // q-powers are units: (q^{1/2}+1)/(q^{-1/2}+1) = q^{1/2}
    CHECK(qlaurent_exact_div(q(1) + q(0), q(-1) + q(0)) == q(1));
}

TEST_CASE("t-binomials match small hand values") {
    CHECK(t_binomial(5, 0, 3) == QLaurent(1));
    CHECK(t_binomial(0, 0, 4) == QLaurent(1));
    // (2 choose 1) at t = q: q + q^{-1}
    CHECK(t_binomial(2, 1, 2) == q(2) + q(-2));
    CHECK(t_binomial(3, 4, 2) == QLaurent());
    CHECK(t_binomial(3, -1, 2) == QLaurent());
    // (3 choose 1) at t = q^{1/2}: q + 1 + q^{-1}
    CHECK(t_binomial(3, 1, 1) == q(2) + q(0) + q(-2));
}

TEST_CASE("t-binomials agree with the quotient formula") {
    // Independent route: (t^r - t^-r)...(t^{r-p+1} - t^{-r+p-1}) divided by
    // (t^p - t^-p)...(t - t^-1), evaluated by exact Laurent division.
    for (int d = 1; d <= 6; ++d) {
        for (int r = 0; r <= 8; ++r) {
            for (int p = 0; p <= r; ++p) {
                QLaurent num(1), den(1);
                for (int i = 0; i < p; ++i) {
                    num *= q(static_cast<std::int64_t>(d) * (r - i)) - q(-static_cast<std::int64_t>(d) * (r - i));
                    den *= q(static_cast<std::int64_t>(d) * (p - i)) - q(-static_cast<std::int64_t>(d) * (p - i));
                }
                CHECK(t_binomial(r, p, d) == qlaurent_exact_div(num, den));
            }
        }
    }
}

TEST_CASE("t-binomials are bar-invariant") {
    for (int d = 1; d <= 4; ++d)
        for (int r = 0; r <= 8; ++r)
            for (int p = 0; p <= r; ++p) CHECK(qlaurent_bar(t_binomial(r, p, d)) == t_binomial(r, p, d));
}
