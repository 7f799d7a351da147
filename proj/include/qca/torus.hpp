#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qca/qlaurent.hpp"

namespace qca {

using IntMat = std::vector<std::vector<std::int64_t>>;

/// Exponent vector in the rank-m lattice; std::vector's operator< is the
/// lexicographic order used as the monomial order throughout.
using ExpVec = std::vector<std::int64_t>;

ExpVec unit_vec(int m, int i);  // e_i, 1-based i
ExpVec zero_vec(int m);
ExpVec vec_add(const ExpVec& a, const ExpVec& b);
ExpVec vec_sub(const ExpVec& a, const ExpVec& b);
ExpVec vec_neg(const ExpVec& a);
ExpVec vec_scaled(const ExpVec& a, std::int64_t s);

/// Skew-symmetric m x m integer matrix; the bilinear form of a based quantum
/// torus.  Skewness is checked at construction.
class SkewForm {
public:
    SkewForm() = default;
    explicit SkewForm(std::vector<std::vector<std::int64_t>> entries);

    static SkewForm zero(int m);

    int size() const { return static_cast<int>(entries_.size()); }
    std::int64_t entry(int i, int j) const { return entries_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const std::vector<std::vector<std::int64_t>>& entries() const { return entries_; }

    /// Lambda(e, f) = e^T Lambda f.
    std::int64_t eval(const ExpVec& e, const ExpVec& f) const;

    friend bool operator==(const SkewForm&, const SkewForm&) = default;

private:
    std::vector<std::vector<std::int64_t>> entries_;
};

using SkewFormPtr = std::shared_ptr<const SkewForm>;

/// Element of the based quantum torus over Z[q^{+-1/2}]: a finite combination
/// of basis monomials X^e with multiplication X^e X^f = q^{Lambda(e,f)/2} X^{e+f}.
class TorusElement {
public:
    using TermMap = std::map<ExpVec, QLaurent>;

    TorusElement() = default;
    explicit TorusElement(SkewFormPtr form) : form_(std::move(form)) {}

    /// c * X^e
    static TorusElement monomial(SkewFormPtr form, ExpVec e, QLaurent c = QLaurent(1));
    static TorusElement scalar(SkewFormPtr form, QLaurent c);
    static TorusElement one(SkewFormPtr form) { return scalar(std::move(form), QLaurent(1)); }

    const SkewFormPtr& form() const { return form_; }
    int rank() const { return form_ ? form_->size() : 0; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->second.is_one() && terms_.begin()->first == zero_vec(rank()); }

    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
    TorusElement& operator*=(const TorusElement& o) { return *this = *this * o; }

    TorusElement scaled(const QLaurent& c) const;

    friend bool operator==(const TorusElement& a, const TorusElement& b);

    std::string str() const;

    /// Internal: insert c * X^e, dropping the term if it cancels to zero.
    void add_term(const ExpVec& e, const QLaurent& c);

private:
    void require_same_form(const TorusElement& o) const;

    SkewFormPtr form_;
    TermMap terms_;
};

/// Coefficientwise bar-involution; basis monomials are fixed.  Satisfies
/// bar(AB) = bar(B) bar(A).
TorusElement torus_bar(const TorusElement& a);

/// a^k by repeated squaring (k >= 0); powers of a single element commute
/// with themselves, so the order of the squarings is immaterial.
TorusElement torus_pow(const TorusElement& a, std::int64_t k);

/// Exact Q with divisor * Q = numerator; throws NotDivisible when the
/// quotient does not lie in the torus.
TorusElement exact_left_divide(const TorusElement& divisor, const TorusElement& numerator);

/// Exact Q with Q * divisor = numerator.
TorusElement exact_right_divide(const TorusElement& divisor, const TorusElement& numerator);

/// q^{shift} * X^{k_1 c_1} ... X^{k_p c_p} as one element: the ordered product
/// of basis-monomial powers with an explicit q-prefactor.
TorusElement frame_product(const SkewFormPtr& form, std::span<const std::pair<ExpVec, std::int64_t>> factors,
                           HalfInt q_shift);

/// Twice the normalization exponent sum_{l<k} c_k c_l lambda_{kl}; the
/// prefactor making q^{shift/2} X_1^{c_1}...X_m^{c_m} a frame monomial.
std::int64_t normalization_shift_twice(const SkewForm& form, const ExpVec& c);

}  // namespace qca
