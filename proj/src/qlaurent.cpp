#include "qca/qlaurent.hpp"

#include <sstream>
#include <vector>

namespace qca {

std::string HalfInt::str() const {
    std::ostringstream os;
    if (twice % 2 == 0)
        os << twice / 2;
    else
        os << twice << "/2";
    return os.str();
}

bool QLaurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == HalfInt(0) && terms_.begin()->second == 1;
}

bool QLaurent::is_monomial(HalfInt* e, Int* c) const {
    if (terms_.size() != 1) return false;
    if (e) *e = terms_.begin()->first;
    if (c) *c = terms_.begin()->second;
    return true;
}

void QLaurent::add_term(HalfInt e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

QLaurent operator-(const QLaurent& a) {
    QLaurent r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

QLaurent QLaurent::shifted(HalfInt e) const {
    QLaurent r;
    for (const auto& [ex, c] : terms_) r.terms_.emplace(ex + e, c);
    return r;
}

std::string QLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest power first reads like handwritten polynomials.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int abs_c = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e.twice == 0) {
            os << abs_c;
        } else {
            if (abs_c != 1) os << abs_c << "*";
            os << "q";
            if (e.twice != 2) os << "^{" << e.str() << "}";
        }
    }
    return os.str();
}

QLaurent qlaurent_bar(const QLaurent& a) {
    QLaurent r;
    for (const auto& [e, c] : a.terms()) r += QLaurent::q_power(-e, c);
    return r;
}

Int qlaurent_eval_one(const QLaurent& a) {
    Int s = 0;
    for (const auto& [e, c] : a.terms()) s += c;
    return s;
}

QLaurent qlaurent_exact_div(const QLaurent& a, const QLaurent& b) {
    if (b.is_zero()) throw NotDivisible("division by zero in Z[q^{+-1/2}]");
    if (a.is_zero()) return QLaurent();
    QLaurent rem = a;
    QLaurent quot;
    const auto& bt = b.terms();
    const HalfInt eb = bt.rbegin()->first;
    const Int& cb = bt.rbegin()->second;
    while (!rem.is_zero()) {
        const auto& rt = rem.terms();
        const HalfInt er = rt.rbegin()->first;
        const Int& cr = rt.rbegin()->second;
        if (cr % cb != 0) throw NotDivisible("inexact coefficient quotient in Z[q^{+-1/2}]");
        // Degree of the remainder must not drop below deg(b) + ord(rem) bound;
        // an inexact division surfaces as a nonterminating degree drop, so we
        // stop once the candidate term falls under the order of a/b.
        QLaurent term = QLaurent::q_power(er - eb, cr / cb);
        quot += term;
        rem -= term * b;
        if (!rem.is_zero() && rem.terms().rbegin()->first >= er)
            throw NotDivisible("leading term failed to cancel");
        if (!rem.is_zero()) {
            // The true quotient's lowest exponent is ord(a) - ord(b); any
            // candidate below it proves inexactness.
            HalfInt next_exp = rem.terms().rbegin()->first - eb;
            HalfInt low_bound = a.terms().begin()->first - b.terms().begin()->first;
            if (next_exp < low_bound) throw NotDivisible("quotient support exhausted");
        }
    }
    return quot;
}

QLaurent t_binomial(int r, int p, int d_half_units) {
    if (r < 0) throw BadInput("t_binomial requires r >= 0");
    if (p < 0 || p > r) return QLaurent();
    // Coefficients of prod_{s=0}^{r-1} (1 + t^{r-1-2s} x) as a polynomial in x.
    std::vector<QLaurent> coeff(static_cast<size_t>(r) + 1);
    coeff[0] = QLaurent(1);
    for (int s = 0; s < r; ++s) {
        // t^{r-1-2s} with t = q^{d/2}: twice-exponent d*(r-1-2s).
        QLaurent tpow = QLaurent::q_power(HalfInt(static_cast<std::int64_t>(d_half_units) * (r - 1 - 2 * s)));
        for (int j = s + 1; j >= 1; --j) coeff[j] += tpow * coeff[j - 1];
    }
    return coeff[static_cast<size_t>(p)];
}

}  // namespace qca
