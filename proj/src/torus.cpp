#include "qca/torus.hpp"

#include <algorithm>
#include <sstream>

#include "qca/budget.hpp"
#include "qca/errors.hpp"

namespace qca {

ExpVec unit_vec(int m, int i) {
    ExpVec e(static_cast<size_t>(m), 0);
    e[static_cast<size_t>(i - 1)] = 1;
    return e;
}

ExpVec zero_vec(int m) { return ExpVec(static_cast<size_t>(m), 0); }

ExpVec vec_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

ExpVec vec_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

ExpVec vec_neg(const ExpVec& a) {
    ExpVec r = a;
    for (auto& x : r) x = -x;
    return r;
}

ExpVec vec_scaled(const ExpVec& a, std::int64_t s) {
    ExpVec r = a;
    for (auto& x : r) x *= s;
    return r;
}

SkewForm::SkewForm(std::vector<std::vector<std::int64_t>> entries) : entries_(std::move(entries)) {
    const size_t m = entries_.size();
    for (size_t i = 0; i < m; ++i) {
        if (entries_[i].size() != m) throw NotSkewSymmetric("form matrix is not square");
        for (size_t j = 0; j <= i; ++j) {
            if (entries_[i][j] != -entries_[j][i])
                throw NotSkewSymmetric("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                       ") violates skew-symmetry");
        }
    }
}

SkewForm SkewForm::zero(int m) {
    return SkewForm(std::vector<std::vector<std::int64_t>>(static_cast<size_t>(m),
                                                           std::vector<std::int64_t>(static_cast<size_t>(m), 0)));
}

std::int64_t SkewForm::eval(const ExpVec& e, const ExpVec& f) const {
    const size_t m = entries_.size();
    if (e.size() != m || f.size() != m) throw RankMismatch("vector length does not match form rank");
    std::int64_t s = 0;
    for (size_t i = 0; i < m; ++i) {
        if (e[i] == 0) continue;
        std::int64_t row = 0;
        for (size_t j = 0; j < m; ++j) row += entries_[i][j] * f[j];
        s += e[i] * row;
    }
    return s;
}

TorusElement TorusElement::monomial(SkewFormPtr form, ExpVec e, QLaurent c) {
    TorusElement r(std::move(form));
    if (e.size() != static_cast<size_t>(r.rank())) throw RankMismatch("exponent length does not match form rank");
    if (!c.is_zero()) r.terms_.emplace(std::move(e), std::move(c));
    return r;
}

TorusElement TorusElement::scalar(SkewFormPtr form, QLaurent c) {
    TorusElement r(std::move(form));
    if (!c.is_zero()) r.terms_.emplace(zero_vec(r.rank()), std::move(c));
    return r;
}

void TorusElement::require_same_form(const TorusElement& o) const {
    if (form_ == o.form_) return;
    if (form_ && o.form_ && *form_ == *o.form_) return;
    throw RankMismatch("operands belong to different quantum tori");
}

void TorusElement::add_term(const ExpVec& e, const QLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    require_same_form(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
    require_same_form(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    a.require_same_form(b);
    TorusElement r(a.form_);
    const size_t m = static_cast<size_t>(a.rank());
    std::vector<std::int64_t> row(m);
    ExpVec sum(m);
    for (const auto& [ea, ca] : a.terms_) {
        OpBudget::charge(b.terms_.size());
        // Hoist e^T * Lambda out of the inner loop.
        for (size_t j = 0; j < m; ++j) {
            std::int64_t s = 0;
            for (size_t i = 0; i < m; ++i) s += ea[i] * a.form_->entry(static_cast<int>(i), static_cast<int>(j));
            row[j] = s;
        }
        for (const auto& [eb, cb] : b.terms_) {
            std::int64_t twist = 0;
            for (size_t j = 0; j < m; ++j) {
                twist += row[j] * eb[j];
                sum[j] = ea[j] + eb[j];
            }
            // X^e X^f = q^{Lambda(e,f)/2} X^{e+f}
            r.add_term(sum, (ca * cb).shifted(HalfInt(twist)));
        }
    }
    return r;
}

TorusElement TorusElement::scaled(const QLaurent& c) const {
    TorusElement r(form_);
    if (c.is_zero()) return r;
    for (const auto& [e, cc] : terms_) {
        QLaurent prod = cc * c;
        if (!prod.is_zero()) r.terms_.emplace(e, std::move(prod));
    }
    return r;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
    if (a.form_ != b.form_ && !(a.form_ && b.form_ && *a.form_ == *b.form_)) return false;
    return a.terms_ == b.terms_;
}

std::string TorusElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*X^(";
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) os << ",";
            os << e[i];
        }
        os << ")";
    }
    return os.str();
}

TorusElement torus_bar(const TorusElement& a) {
    TorusElement r(a.form());
    for (const auto& [e, c] : a.terms()) r.add_term(e, qlaurent_bar(c));
    return r;
}

TorusElement torus_pow(const TorusElement& a, std::int64_t k) {
    if (k < 0) throw UnsupportedExponent("torus_pow requires a nonnegative power");
    TorusElement r = TorusElement::one(a.form());
    TorusElement base = a;
    while (k > 0) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

namespace {

struct SupportBox {
    ExpVec lo, hi;

    static SupportBox of(const TorusElement& x) {
        SupportBox b;
        const int m = x.rank();
        b.lo = ExpVec(static_cast<size_t>(m), 0);
        b.hi = ExpVec(static_cast<size_t>(m), 0);
        bool first = true;
        for (const auto& [e, c] : x.terms()) {
            if (first) {
                b.lo = b.hi = e;
                first = false;
                continue;
            }
            for (size_t i = 0; i < e.size(); ++i) {
                b.lo[i] = std::min(b.lo[i], e[i]);
                b.hi[i] = std::max(b.hi[i], e[i]);
            }
        }
        return b;
    }

    bool contains(const ExpVec& e) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] < lo[i] || e[i] > hi[i]) return false;
        return true;
    }
};

// Shared engine for both division sides.  Exactness gives
// Newt(numerator) = Newt(divisor) + Newt(quotient), so every quotient
// exponent lies in the componentwise box difference of the supports; a
// candidate outside it proves the quotient is not in the torus, which also
// bounds the number of iterations.
TorusElement divide_impl(const TorusElement& divisor, const TorusElement& numerator, bool divisor_on_left) {
    if (divisor.is_zero()) throw NotDivisible("division by zero torus element");
    TorusElement quot(numerator.form());
    if (numerator.is_zero()) return quot;
    if (divisor.rank() != numerator.rank()) throw RankMismatch("division operands of different rank");

    const SupportBox box_n = SupportBox::of(numerator);
    const SupportBox box_d = SupportBox::of(divisor);
    ExpVec q_lo = vec_sub(box_n.lo, box_d.lo);
    ExpVec q_hi = vec_sub(box_n.hi, box_d.hi);
    SupportBox box_q{q_lo, q_hi};

    const ExpVec& lead_d = divisor.terms().rbegin()->first;
    const QLaurent& lead_dc = divisor.terms().rbegin()->second;
    const SkewForm& form = *numerator.form();

    TorusElement rem = numerator;
    while (!rem.is_zero()) {
        const ExpVec lead_r = rem.terms().rbegin()->first;
        ExpVec eq = vec_sub(lead_r, lead_d);
        if (!box_q.contains(eq)) throw NotDivisible("quotient exponent outside feasible support");
        QLaurent cq = qlaurent_exact_div(rem.terms().rbegin()->second, lead_dc);
        // Undo the q-twist the product will introduce at the leading exponent.
        std::int64_t twist = divisor_on_left ? form.eval(lead_d, eq) : form.eval(eq, lead_d);
        cq = cq.shifted(HalfInt(-twist));
        TorusElement term = TorusElement::monomial(numerator.form(), eq, cq);
        quot += term;
        rem -= divisor_on_left ? (divisor * term) : (term * divisor);
        if (!rem.is_zero() && !(rem.terms().rbegin()->first < lead_r))
            throw NotDivisible("leading term failed to cancel");
    }
    return quot;
}

}  // namespace

TorusElement exact_left_divide(const TorusElement& divisor, const TorusElement& numerator) {
    return divide_impl(divisor, numerator, /*divisor_on_left=*/true);
}

TorusElement exact_right_divide(const TorusElement& divisor, const TorusElement& numerator) {
    return divide_impl(divisor, numerator, /*divisor_on_left=*/false);
}

TorusElement frame_product(const SkewFormPtr& form, std::span<const std::pair<ExpVec, std::int64_t>> factors,
                           HalfInt q_shift) {
    const int m = form->size();
    ExpVec total = zero_vec(m);
    std::int64_t twist_twice = 0;  // accumulated q-exponents, in twice-units
    for (const auto& [c, k] : factors) {
        if (k < 0) throw UnsupportedExponent("frame_product powers must be nonnegative");
        if (k == 0) continue;
        ExpVec step = vec_scaled(c, k);
        twist_twice += form->eval(total, step);
        total = vec_add(total, step);
    }
    return TorusElement::monomial(form, total, QLaurent::q_power(HalfInt(twist_twice) + q_shift));
}

std::int64_t normalization_shift_twice(const SkewForm& form, const ExpVec& c) {
    std::int64_t s = 0;
    const int m = form.size();
    for (int k = 0; k < m; ++k) {
        if (c[static_cast<size_t>(k)] == 0) continue;
        for (int l = 0; l < k; ++l)
            s += c[static_cast<size_t>(k)] * c[static_cast<size_t>(l)] * form.entry(k, l);
    }
    return s;
}

}  // namespace qca
