#include "qca/classical.hpp"

#include <algorithm>
#include <sstream>

#include "qca/budget.hpp"
#include "qca/errors.hpp"

namespace qca {

CommPoly CommPoly::constant(int n_vars, Int c) {
    CommPoly p(n_vars);
    if (c != 0) p.terms_.emplace(std::vector<std::int64_t>(static_cast<size_t>(n_vars), 0), std::move(c));
    return p;
}

CommPoly CommPoly::variable(int n_vars, int j) {
    CommPoly p(n_vars);
    std::vector<std::int64_t> e(static_cast<size_t>(n_vars), 0);
    e[static_cast<size_t>(j - 1)] = 1;
    p.terms_.emplace(std::move(e), 1);
    return p;
}

CommPoly CommPoly::monomial(int n_vars, std::vector<std::int64_t> exp, Int c) {
    CommPoly p(n_vars);
    for (auto x : exp)
        if (x < 0) throw NegativeExponent("CommPoly exponents must be nonnegative");
    if (c != 0) p.terms_.emplace(std::move(exp), std::move(c));
    return p;
}

bool CommPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(), [](auto x) { return x == 0; });
}

Int CommPoly::constant_term() const {
    auto it = terms_.find(std::vector<std::int64_t>(static_cast<size_t>(n_), 0));
    return it == terms_.end() ? Int(0) : it->second;
}

void CommPoly::add_term(const std::vector<std::int64_t>& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly r(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        OpBudget::charge(b.terms_.size());
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<std::int64_t> e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

CommPoly CommPoly::pow(std::int64_t k) const {
    CommPoly r = one(n_);
    CommPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

std::string CommPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int abs_c = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](auto x) { return x != 0; });
        if (abs_c != 1 || !any_var) os << abs_c;
        bool star = abs_c != 1;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            os << "u" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

CommPoly comm_exact_div(const CommPoly& a, const CommPoly& b) {
    if (b.is_zero()) throw InexactDivision("division by zero polynomial");
    CommPoly quot(a.vars());
    CommPoly rem = a;
    const auto& lead_b = *b.terms().rbegin();
    while (!rem.is_zero()) {
        const auto lead_r = *rem.terms().rbegin();
        std::vector<std::int64_t> eq = lead_r.first;
        for (size_t i = 0; i < eq.size(); ++i) {
            eq[i] -= lead_b.first[i];
            if (eq[i] < 0) throw InexactDivision("quotient would need a negative exponent");
        }
        if (lead_r.second % lead_b.second != 0) throw InexactDivision("inexact coefficient quotient");
        CommPoly term = CommPoly::monomial(a.vars(), eq, lead_r.second / lead_b.second);
        quot += term;
        CommPoly sub = term * b;
        for (const auto& [e, c] : sub.terms()) rem.add_term(e, -c);
    }
    return quot;
}

namespace {

void check_direction(int k, int n) {
    if (k < 1 || k > n) throw BadDirection("mutation direction out of range");
}

}  // namespace

std::vector<CommPoly> classical_f_polys(const IntMat& b0, const MutationWord& word) {
    const int n = static_cast<int>(b0.size());
    ExchangeData fam = ExchangeData::principal(b0);
    std::vector<CommPoly> f(static_cast<size_t>(n), CommPoly::one(n));
    for (int k : word) {
        check_direction(k, n);
        const int kk = k - 1;
        CommPoly num(n);
        for (int eps : {+1, -1}) {
            CommPoly prod = CommPoly::one(n);
            for (int i = 0; i < n; ++i) {
                std::int64_t p = pos_part(eps * fam.entry(i, kk));
                if (p > 0) prod = prod * f[static_cast<size_t>(i)].pow(p);
            }
            std::vector<std::int64_t> mono(static_cast<size_t>(n), 0);
            for (int j = 0; j < n; ++j) mono[static_cast<size_t>(j)] = pos_part(eps * fam.entry(n + j, kk));
            num += prod * CommPoly::monomial(n, mono, 1);
        }
        f[static_cast<size_t>(kk)] = comm_exact_div(num, f[static_cast<size_t>(kk)]);
        fam = matrix_mutate(fam, k);
    }
    return f;
}

std::vector<GVec> g_vectors(const IntMat& b0, const MutationWord& word) {
    const int n = static_cast<int>(b0.size());
    ExchangeData fam = ExchangeData::principal(b0);
    std::vector<GVec> g;
    g.reserve(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) g.push_back(unit_vec(n, j));
    for (int k : word) {
        check_direction(k, n);
        const int kk = k - 1;
        GVec plus, minus;
        for (int eps : {+1, -1}) {
            GVec out = vec_neg(g[static_cast<size_t>(kk)]);
            for (int i = 0; i < n; ++i) {
                std::int64_t p = pos_part(eps * fam.entry(i, kk));
                if (p == 0) continue;
                for (int c = 0; c < n; ++c)
                    out[static_cast<size_t>(c)] += p * g[static_cast<size_t>(i)][static_cast<size_t>(c)];
            }
            for (int j = 0; j < n; ++j) {
                std::int64_t p = pos_part(eps * fam.entry(n + j, kk));
                if (p == 0) continue;
                for (int c = 0; c < n; ++c) out[static_cast<size_t>(c)] -= p * b0[static_cast<size_t>(c)][static_cast<size_t>(j)];
            }
            (eps > 0 ? plus : minus) = out;
        }
        if (plus != minus) throw EpsilonMismatch("g-vector recurrence differs between signs");
        g[static_cast<size_t>(kk)] = plus;
        fam = matrix_mutate(fam, k);
    }
    return g;
}

std::vector<GVec> extended_g_vectors(const ExchangeData& btilde, const MutationWord& word) {
    const int m = btilde.rows(), n = btilde.cols();
    ExchangeData cur = btilde;
    ExchangeData fam = ExchangeData::principal(btilde.principal_part(), btilde.d());
    std::vector<GVec> g;
    g.reserve(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) g.push_back(unit_vec(m, j));
    for (int k : word) {
        check_direction(k, n);
        const int kk = k - 1;
        GVec out = vec_neg(g[static_cast<size_t>(kk)]);
        for (int i = 0; i < m; ++i) {
            std::int64_t p = pos_part(-cur.entry(i, kk));
            if (p == 0) continue;
            for (int c = 0; c < m; ++c)
                out[static_cast<size_t>(c)] += p * g[static_cast<size_t>(i)][static_cast<size_t>(c)];
        }
        for (int j = 0; j < n; ++j) {
            std::int64_t p = pos_part(-fam.entry(n + j, kk));
            if (p == 0) continue;
            for (int c = 0; c < m; ++c) out[static_cast<size_t>(c)] -= p * btilde.entry(c, j);
        }
        g[static_cast<size_t>(kk)] = out;
        cur = matrix_mutate(cur, k);
        fam = matrix_mutate(fam, k);
    }
    return g;
}

std::vector<DVec> denominator_vectors(const IntMat& b0, const MutationWord& word) {
    const int n = static_cast<int>(b0.size());
    ExchangeData fam(b0);  // n x n; mutation of the principal part only
    std::vector<DVec> d;
    d.reserve(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) d.push_back(vec_neg(unit_vec(n, j)));
    for (int k : word) {
        check_direction(k, n);
        const int kk = k - 1;
        DVec plus(static_cast<size_t>(n), 0), minus(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            std::int64_t pp = pos_part(fam.entry(i, kk));
            std::int64_t pm = pos_part(-fam.entry(i, kk));
            for (int c = 0; c < n; ++c) {
                plus[static_cast<size_t>(c)] += pp * d[static_cast<size_t>(i)][static_cast<size_t>(c)];
                minus[static_cast<size_t>(c)] += pm * d[static_cast<size_t>(i)][static_cast<size_t>(c)];
            }
        }
        DVec out = vec_neg(d[static_cast<size_t>(kk)]);
        for (int c = 0; c < n; ++c)
            out[static_cast<size_t>(c)] += std::max(plus[static_cast<size_t>(c)], minus[static_cast<size_t>(c)]);
        d[static_cast<size_t>(kk)] = out;
        fam = matrix_mutate(fam, k);
    }
    return d;
}

}  // namespace qca
