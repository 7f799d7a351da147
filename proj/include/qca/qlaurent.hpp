#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "qca/errors.hpp"

namespace qca {

using Int = boost::multiprecision::cpp_int;

/// An element of (1/2)Z, stored as twice its value so that all exponents of
/// q^{1/2} stay integral.
struct HalfInt {
    std::int64_t twice = 0;

    HalfInt() = default;
    explicit constexpr HalfInt(std::int64_t twice_value) : twice(twice_value) {}

    static constexpr HalfInt whole(std::int64_t k) { return HalfInt(2 * k); }

    constexpr bool is_integer() const { return twice % 2 == 0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }
    HalfInt& operator+=(HalfInt o) {
        twice += o.twice;
        return *this;
    }
    HalfInt& operator-=(HalfInt o) {
        twice -= o.twice;
        return *this;
    }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    std::string str() const;
};

/// Element of Z[q^{1/2}, q^{-1/2}]: finite map from half-integer exponents of
/// q to nonzero integer coefficients.  The empty map is zero.
class QLaurent {
public:
    using TermMap = std::map<HalfInt, Int>;

    QLaurent() = default;
    QLaurent(int value) : QLaurent(Int(value)) {}  // NOLINT(google-explicit-constructor)
    QLaurent(Int value) {                          // NOLINT(google-explicit-constructor)
        if (value != 0) terms_[HalfInt(0)] = std::move(value);
    }

    /// c * q^e
    static QLaurent q_power(HalfInt e, Int c = 1) {
        QLaurent r;
        if (c != 0) r.terms_[e] = std::move(c);
        return r;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// True iff the value is +/- a single power of q.  Exponent stored in *e.
    bool is_monomial(HalfInt* e = nullptr, Int* c = nullptr) const;

    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator-(const QLaurent& a);
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

    /// Multiply by q^e (exponent shift).
    QLaurent shifted(HalfInt e) const;

    friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    void add_term(HalfInt e, const Int& c);

    TermMap terms_;
};

/// q^{r/2} |-> q^{-r/2} termwise; a ring automorphism and an involution.
QLaurent qlaurent_bar(const QLaurent& a);

/// Evaluation at q = 1 (the coefficient sum); a ring homomorphism onto Z.
Int qlaurent_eval_one(const QLaurent& a);

/// Exact quotient a / b in Z[q^{+-1/2}]; throws NotDivisible when the
/// division does not come out exactly (b == 0 included).
QLaurent qlaurent_exact_div(const QLaurent& a, const QLaurent& b);

/// Gaussian binomial (r choose p) evaluated at t = q^{d/2}, computed by
/// expanding prod_{p=0}^{r-1} (1 + t^{r-1-2p} x) and reading the coefficient
/// of x^p; division-free.  Zero when p < 0 or p > r.
QLaurent t_binomial(int r, int p, int d_half_units);

}  // namespace qca
