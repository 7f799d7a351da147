#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qca/errors.hpp"
#include "qca/torus.hpp"

using namespace qca;

namespace {

SkewFormPtr form2() {
    static SkewFormPtr f = std::make_shared<const SkewForm>(IntMat{{0, 1}, {-1, 0}});
    return f;
}

TorusElement mono(const SkewFormPtr& f, ExpVec e, std::int64_t twice = 0, std::int64_t c = 1) {
    return TorusElement::monomial(f, std::move(e), QLaurent::q_power(HalfInt(twice), Int(c)));
}

TorusElement random_element(std::mt19937_64& rng, const SkewFormPtr& f, int max_terms, std::int64_t max_exp = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<std::int64_t> exp(-max_exp, max_exp), twice(-4, 4), coeff(-3, 3);
    TorusElement out(f);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        ExpVec e(static_cast<size_t>(f->size()));
        for (auto& x : e) x = exp(rng);
        out += mono(f, e, twice(rng), coeff(rng));
    }
    return out;
}

}  // namespace

TEST_CASE("skew form construction rejects non-skew matrices") {
    CHECK_THROWS_AS(SkewForm(IntMat{{0, 1}, {1, 0}}), NotSkewSymmetric);
    CHECK_THROWS_AS(SkewForm(IntMat{{1, 0}, {0, -1}}), NotSkewSymmetric);
    CHECK_NOTHROW(SkewForm::zero(3));
    CHECK_NOTHROW(SkewForm(IntMat{}));  // rank 0 torus is allowed
}

TEST_CASE("monomial product twists by half the form value") {
    auto f = form2();
    // X^{e1} X^{e2} = q^{1/2} X^{e1+e2}
    CHECK(mono(f, {1, 0}) * mono(f, {0, 1}) == mono(f, {1, 1}, 1));
    // X^e X^{-e} = 1
    CHECK(mono(f, {2, -1}) * mono(f, {-2, 1}) == TorusElement::one(f));
}

TEST_CASE("quasi-commutation X^e X^f = q^{L(e,f)} X^f X^e") {
    auto f = form2();
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> exp(-3, 3);
    for (int i = 0; i < 100; ++i) {
        ExpVec e{exp(rng), exp(rng)}, g{exp(rng), exp(rng)};
        auto lhs = mono(f, e) * mono(f, g);
        auto rhs = (mono(f, g) * mono(f, e)).scaled(QLaurent::q_power(HalfInt(2 * f->eval(e, g))));
        CHECK(lhs == rhs);
    }
    // X^{e1}X^{e2} - q X^{e2}X^{e1} = 0 for this form
    auto zero = mono(f, {1, 0}) * mono(f, {0, 1}) - (mono(f, {0, 1}) * mono(f, {1, 0})).scaled(QLaurent::q_power(HalfInt(2)));
    CHECK(zero.is_zero());
}

TEST_CASE("multiplication is associative and distributes") {
    auto f = form2();
    std::mt19937_64 rng(29);
    for (int i = 0; i < 60; ++i) {
        auto a = random_element(rng, f, 3), b = random_element(rng, f, 3), c = random_element(rng, f, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("mixing tori of different forms is rejected") {
    auto f = form2();
    auto g = std::make_shared<const SkewForm>(SkewForm::zero(2));
    CHECK_THROWS_AS(mono(f, {1, 0}) * mono(g, {0, 1}), RankMismatch);
}

TEST_CASE("bar involution is an anti-automorphism fixing basis monomials") {
    auto f = form2();
    CHECK(torus_bar(mono(f, {1, 0}, 1)) == mono(f, {1, 0}, -1));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 80; ++i) {
        auto a = random_element(rng, f, 3), b = random_element(rng, f, 3);
        CHECK(torus_bar(torus_bar(a)) == a);
        CHECK(torus_bar(a * b) == torus_bar(b) * torus_bar(a));
    }
}

TEST_CASE("left and right division undo the corresponding multiplication") {
    auto f = form2();
    std::mt19937_64 rng(37);
    for (int i = 0; i < 120; ++i) {
        auto b = random_element(rng, f, 6), qt = random_element(rng, f, 6);
        if (b.is_zero()) continue;
        CHECK(exact_left_divide(b, b * qt) == qt);
        CHECK(exact_right_divide(b, qt * b) == qt);
    }
}

TEST_CASE("division by one is the identity and inexact division throws") {
    auto f = form2();
    std::mt19937_64 rng(41);
    for (int i = 0; i < 40; ++i) {
        auto a = random_element(rng, f, 4);
        CHECK(exact_left_divide(TorusElement::one(f), a) == a);
    }
    // (X^{e1} + 1) does not divide X^{e2}
    auto divisor = mono(f, {1, 0}) + TorusElement::one(f);
    CHECK_THROWS_AS(exact_left_divide(divisor, mono(f, {0, 1})), NotDivisible);
    // ... nor 1 (a geometric series would be needed)
    CHECK_THROWS_AS(exact_left_divide(divisor, TorusElement::one(f)), NotDivisible);
    CHECK_THROWS_AS(exact_left_divide(TorusElement(f), mono(f, {0, 1})), NotDivisible);
}

TEST_CASE("division round-trips monomial multiples") {
    auto f = form2();
    std::mt19937_64 rng(43);
    for (int i = 0; i < 60; ++i) {
        auto fd = random_element(rng, f, 5);
        auto x = mono(f, {1, 0});
        CHECK(exact_left_divide(x, x * fd) == fd);
    }
}

TEST_CASE("frame products normalize ordered monomial powers") {
    auto f = form2();
    std::vector<std::pair<ExpVec, std::int64_t>> empty;
    CHECK(frame_product(f, empty, HalfInt(0)) == TorusElement::one(f));

    std::vector<std::pair<ExpVec, std::int64_t>> single = {{{2, -1}, 1}};
    CHECK(frame_product(f, single, HalfInt(0)) == mono(f, {2, -1}));

    // q^{-1/2} X^{e1} X^{e2} = X^{e1+e2}
    std::vector<std::pair<ExpVec, std::int64_t>> two = {{{1, 0}, 1}, {{0, 1}, 1}};
    CHECK(frame_product(f, two, HalfInt(-1)) == mono(f, {1, 1}));

    std::vector<std::pair<ExpVec, std::int64_t>> neg = {{{1, 0}, -1}};
    CHECK_THROWS_AS(frame_product(f, neg, HalfInt(0)), UnsupportedExponent);
}

TEST_CASE("normalization shift matches the frame monomial prefactor") {
    // q^{shift/2} X_1^{c_1} X_2^{c_2} must equal the basis monomial X^c.
    auto f = form2();
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<std::int64_t> exp(0, 3);
    for (int i = 0; i < 50; ++i) {
        ExpVec c{exp(rng), exp(rng)};
        std::vector<std::pair<ExpVec, std::int64_t>> factors = {{{1, 0}, c[0]}, {{0, 1}, c[1]}};
        CHECK(frame_product(f, factors, HalfInt(normalization_shift_twice(*f, c))) == mono(f, c));
    }
}
