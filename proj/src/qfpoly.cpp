#include "qca/qfpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "qca/errors.hpp"

namespace qca {

std::shared_ptr<const ZContext> ZContext::make(IntMat b0, std::vector<std::int64_t> d) {
    const int n = static_cast<int>(b0.size());
    if (static_cast<int>(d.size()) != n) throw BadInput("d length does not match matrix rank");
    IntMat form(static_cast<size_t>(n), std::vector<std::int64_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            form[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                d[static_cast<size_t>(i)] * b0[static_cast<size_t>(i)][static_cast<size_t>(j)];
    auto ctx = std::make_shared<ZContext>();
    ctx->b0 = std::move(b0);
    ctx->d = std::move(d);
    ctx->form = std::make_shared<const SkewForm>(std::move(form));  // validates d_i b_ij = -d_j b_ji
    return ctx;
}

QFPoly QFPoly::one(ZContextPtr ctx) {
    QFPoly f;
    f.elem_ = TorusElement::one(ctx->form);
    f.ctx_ = std::move(ctx);
    return f;
}

QFPoly QFPoly::zero(ZContextPtr ctx) {
    QFPoly f;
    f.elem_ = TorusElement(ctx->form);
    f.ctx_ = std::move(ctx);
    return f;
}

QFPoly QFPoly::monomial(ZContextPtr ctx, ExpVec a, QLaurent c) {
    SkewFormPtr form = ctx ? ctx->form : nullptr;
    return from_torus(std::move(ctx), TorusElement::monomial(std::move(form), std::move(a), std::move(c)));
}

QFPoly QFPoly::from_torus(ZContextPtr ctx, TorusElement t) {
    for (const auto& [e, c] : t.terms())
        for (auto x : e)
            if (x < 0) throw NegativeExponent("quantum F-polynomial exponents must be nonnegative");
    QFPoly f;
    f.ctx_ = std::move(ctx);
    f.elem_ = std::move(t);
    return f;
}

QFPoly operator+(const QFPoly& a, const QFPoly& b) { return QFPoly::from_torus(a.ctx_, a.elem_ + b.elem_); }

QFPoly operator*(const QFPoly& a, const QFPoly& b) { return QFPoly::from_torus(a.ctx_, a.elem_ * b.elem_); }

QFPoly QFPoly::scaled(const QLaurent& c) const { return from_torus(ctx_, elem_.scaled(c)); }

bool operator==(const QFPoly& a, const QFPoly& b) {
    if (!a.ctx_ || !b.ctx_) return !a.ctx_ && !b.ctx_;
    return *a.ctx_ == *b.ctx_ && a.elem_.terms() == b.elem_.terms();
}

CommPoly QFPoly::classical_specialization() const {
    CommPoly p(vars());
    for (const auto& [e, c] : elem_.terms()) p.add_term(e, qlaurent_eval_one(c));
    return p;
}

std::string QFPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Terms highest-first to match handwritten polynomials.
    const auto& t = elem_.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const auto& [a, c] = *it;
        if (!first) os << " + ";
        first = false;
        bool any_var = false;
        for (auto x : a) any_var = any_var || x != 0;
        std::string cs = c.str();
        if (!any_var) {
            os << cs;
            continue;
        }
        if (cs != "1") {
            bool needs_parens = cs.find(' ') != std::string::npos || cs.find('-') != std::string::npos;
            os << (needs_parens ? "(" + cs + ")" : cs) << "*";
        }
        os << "Z^(";
        for (size_t i = 0; i < a.size(); ++i) {
            if (i) os << ",";
            os << a[i];
        }
        os << ")";
    }
    return os.str();
}

namespace {

std::int64_t dot3(const std::vector<std::int64_t>& a, const ExpVec& b, const std::vector<std::int64_t>& d) {
    std::int64_t s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i] * d[i];
    return s;
}

}  // namespace

QFPoly l_apply(const std::vector<std::int64_t>& a, const QFPoly& f) {
    TorusElement out(f.context()->form);
    for (const auto& [b, c] : f.terms())
        out.add_term(b, c.shifted(HalfInt(-2 * dot3(a, b, f.context()->d))));
    return QFPoly::from_torus(f.context(), std::move(out));
}

TorusElement substitute_yhat(const QFPoly& f, const ExchangeData& btilde0, const SkewFormPtr& lambda0) {
    if (btilde0.cols() != f.vars()) throw RankMismatch("column count differs from Z-variable count");
    if (lambda0->size() != btilde0.rows()) throw RankMismatch("form rank differs from row count");
    TorusElement out(lambda0);
    for (const auto& [a, c] : f.terms()) {
        ExpVec e(static_cast<size_t>(btilde0.rows()), 0);
        for (int j = 0; j < btilde0.cols(); ++j) {
            if (a[static_cast<size_t>(j)] == 0) continue;
            for (int i = 0; i < btilde0.rows(); ++i)
                e[static_cast<size_t>(i)] += btilde0.entry(i, j) * a[static_cast<size_t>(j)];
        }
        out.add_term(e, c);
    }
    return out;
}

ExtractResult extract_qfpoly(const IntMat& b0, const std::vector<std::int64_t>& d, const SkewForm& lam,
                             const MutationWord& word, int j) {
    const int n = static_cast<int>(b0.size());
    if (j < 1 || j > n) throw BadDirection("cluster index out of range");
    QuantumSeed seed = QuantumSeed::principal(b0, d, lam).mutate_word(word);
    GVec g = g_vectors(b0, word)[static_cast<size_t>(j - 1)];
    ExpVec ghat(static_cast<size_t>(2 * n), 0);
    for (int i = 0; i < n; ++i) ghat[static_cast<size_t>(i)] = g[static_cast<size_t>(i)];
    TorusElement fy = seed.cluster_var(j) * TorusElement::monomial(seed.initial_form(), vec_neg(ghat));

    ZContextPtr ctx = ZContext::make(b0, d);
    TorusElement zelem(ctx->form);
    for (const auto& [e, c] : fy.terms()) {
        ExpVec a(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            a[static_cast<size_t>(i)] = e[static_cast<size_t>(n + i)];
            if (a[static_cast<size_t>(i)] < 0)
                throw NegativeExponent("cluster variable is not polynomial in the Yhat elements");
        }
        for (int i = 0; i < n; ++i) {
            std::int64_t expect = 0;
            for (int l = 0; l < n; ++l)
                expect += b0[static_cast<size_t>(i)][static_cast<size_t>(l)] * a[static_cast<size_t>(l)];
            if (expect != e[static_cast<size_t>(i)])
                throw NotInColumnSpan("torus exponent is outside the span of the initial columns");
        }
        zelem.add_term(a, c);
    }
    return ExtractResult{QFPoly::from_torus(std::move(ctx), std::move(zelem)), std::move(g)};
}

RecurrenceState::RecurrenceState(IntMat b0, std::vector<std::int64_t> d, const SkewForm& lam)
    : ctx_(ZContext::make(b0, d)),
      fam_(ExchangeData::principal(b0, d)),
      lambda0_(principal_lambda(b0, d, lam)),
      lambda_t_(lambda0_) {
    const int n = ctx_->n();
    for (int j = 1; j <= n; ++j) {
        f_.push_back(QFPoly::one(ctx_));
        g_.push_back(unit_vec(n, j));
    }
    rho_ = rho_from_definition(lambda_t_, extended_g());
    for (const auto& row : rho_)
        for (auto v : row)
            if (v != 0) throw std::logic_error("rho table must vanish at the initial vertex");
}

std::vector<GVec> RecurrenceState::extended_g() const {
    const int n = ctx_->n();
    std::vector<GVec> gext;
    gext.reserve(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        GVec v(static_cast<size_t>(2 * n), 0);
        for (int c = 0; c < n; ++c) v[static_cast<size_t>(c)] = g_[static_cast<size_t>(i)][static_cast<size_t>(c)];
        gext.push_back(std::move(v));
    }
    for (int i = n; i < 2 * n; ++i) gext.push_back(unit_vec(2 * n, i + 1));
    return gext;
}

std::vector<std::vector<std::int64_t>> RecurrenceState::rho_from_definition(const SkewForm& lambda_t,
                                                                            const std::vector<GVec>& gext) const {
    const int m = 2 * ctx_->n();
    std::vector<std::vector<std::int64_t>> rho(static_cast<size_t>(m),
                                               std::vector<std::int64_t>(static_cast<size_t>(m), 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            rho[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                lambda_t.entry(i, j) - lambda0_.eval(gext[static_cast<size_t>(i)], gext[static_cast<size_t>(j)]);
    return rho;
}

const QFPoly& RecurrenceState::mutate(int k) {
    const int n = ctx_->n();
    if (k < 1 || k > n) throw BadDirection("mutation direction out of range");
    const int kk = k - 1;
    const auto& d = ctx_->d;

    // New g-vector first (the lambda^eps prefactor needs it).
    GVec g_new;
    {
        std::vector<GVec> gs = g_;
        GVec plus, minus;
        for (int eps : {+1, -1}) {
            GVec out = vec_neg(gs[static_cast<size_t>(kk)]);
            for (int i = 0; i < n; ++i) {
                std::int64_t p = pos_part(eps * fam_.entry(i, kk));
                if (p == 0) continue;
                for (int c = 0; c < n; ++c)
                    out[static_cast<size_t>(c)] += p * gs[static_cast<size_t>(i)][static_cast<size_t>(c)];
            }
            for (int jj = 0; jj < n; ++jj) {
                std::int64_t p = pos_part(eps * fam_.entry(n + jj, kk));
                if (p == 0) continue;
                for (int c = 0; c < n; ++c)
                    out[static_cast<size_t>(c)] -= p * ctx_->b0[static_cast<size_t>(c)][static_cast<size_t>(jj)];
            }
            (eps > 0 ? plus : minus) = out;
        }
        if (plus != minus) throw EpsilonMismatch("g-vector recurrence differs between signs");
        g_new = plus;
    }

    // The two branches of the recurrence, sharing the left factor
    // (L[-g_k] F_k)^{-1}; the division happens once, after the sum.
    TorusElement total(ctx_->form);
    for (int eps : {+1, -1}) {
        // rho^eps, in twice-units (the displayed sum is halved).
        std::int64_t rho_eps_twice = 0;
        for (int i = 0; i < 2 * n; ++i)
            rho_eps_twice -= pos_part(eps * fam_.entry(i, kk)) * rho_[static_cast<size_t>(i)][static_cast<size_t>(kk)];
        for (int i = 0; i < n; ++i)
            for (int jj = i + 1; jj < n; ++jj)
                rho_eps_twice += pos_part(eps * fam_.entry(i, kk)) * pos_part(eps * fam_.entry(jj, kk)) *
                                 rho_[static_cast<size_t>(jj)][static_cast<size_t>(i)];
        for (int i = 0; i < n; ++i)
            for (int jj = 0; jj < n; ++jj)
                rho_eps_twice += pos_part(eps * fam_.entry(i, kk)) * pos_part(eps * fam_.entry(n + jj, kk)) *
                                 rho_[static_cast<size_t>(n + jj)][static_cast<size_t>(i)];
        // lambda^eps, in twice-units.
        std::int64_t lambda_eps_twice = 0;
        for (int i = 0; i < n; ++i)
            lambda_eps_twice +=
                pos_part(eps * fam_.entry(n + i, kk)) * g_new[static_cast<size_t>(i)] * d[static_cast<size_t>(i)];

        QFPoly branch = QFPoly::one(ctx_).scaled(QLaurent::q_power(HalfInt(rho_eps_twice - lambda_eps_twice)));
        for (int i = 0; i < n; ++i) {
            const std::int64_t power = pos_part(eps * fam_.entry(i, kk));
            if (power == 0) continue;
            // G_i = prod_{s=1..power} L[(s-1) g_i](F_i), then the outer shift.
            QFPoly gi = QFPoly::one(ctx_);
            for (std::int64_t s = 1; s <= power; ++s) {
                std::vector<std::int64_t> shift(static_cast<size_t>(n), 0);
                for (int c = 0; c < n; ++c) shift[static_cast<size_t>(c)] = (s - 1) * g_[static_cast<size_t>(i)][static_cast<size_t>(c)];
                gi = gi * l_apply(shift, f_[static_cast<size_t>(i)]);
            }
            std::vector<std::int64_t> outer(static_cast<size_t>(n), 0);
            for (int c = 0; c < n; ++c) outer[static_cast<size_t>(c)] = -g_[static_cast<size_t>(kk)][static_cast<size_t>(c)];
            for (int l = 0; l < i; ++l) {
                std::int64_t p = pos_part(eps * fam_.entry(l, kk));
                if (p == 0) continue;
                for (int c = 0; c < n; ++c)
                    outer[static_cast<size_t>(c)] += p * g_[static_cast<size_t>(l)][static_cast<size_t>(c)];
            }
            branch = branch * l_apply(outer, gi);
        }
        ExpVec zmono(static_cast<size_t>(n), 0);
        for (int l = 0; l < n; ++l) zmono[static_cast<size_t>(l)] = pos_part(eps * fam_.entry(n + l, kk));
        branch = branch * QFPoly::monomial(ctx_, zmono);
        total += branch.element();
    }

    std::vector<std::int64_t> minus_gk(static_cast<size_t>(n), 0);
    for (int c = 0; c < n; ++c) minus_gk[static_cast<size_t>(c)] = -g_[static_cast<size_t>(kk)][static_cast<size_t>(c)];
    QFPoly divisor = l_apply(minus_gk, f_[static_cast<size_t>(kk)]);
    QFPoly f_new = QFPoly::from_torus(ctx_, exact_left_divide(divisor.element(), total));

    // Advance the bookkeeping: matrix, form, g, F, rho.
    const ExchangeData fam_old = fam_;
    const std::vector<GVec> g_old = g_;
    const std::vector<std::vector<std::int64_t>> rho_old = rho_;
    fam_ = matrix_mutate(fam_, k);
    lambda_t_ = lambda_mutate_checked(lambda_t_, fam_old, k);
    g_[static_cast<size_t>(kk)] = g_new;
    f_[static_cast<size_t>(kk)] = std::move(f_new);
    word_.push_back(k);
    word_ = reduced_word(word_);

    rho_ = rho_from_definition(lambda_t_, extended_g());

    // Cross-check the definitional table against the recurrence form.
    const int m = 2 * n;
    for (int i = 0; i < m; ++i) {
        for (int jj = 0; jj < m; ++jj) {
            std::int64_t expect;
            if (i != kk && jj != kk) {
                expect = rho_old[static_cast<size_t>(i)][static_cast<size_t>(jj)];
            } else if (i == kk && jj == kk) {
                expect = 0;
            } else {
                const int other = (i == kk) ? jj : i;
                std::int64_t v;
                if (other >= n) {
                    v = 0;  // frozen rows and columns stay zero
                } else {
                    v = -rho_old[static_cast<size_t>(other)][static_cast<size_t>(kk)];
                    for (int l = 0; l < m; ++l)
                        v += pos_part(-fam_old.entry(l, kk)) * rho_old[static_cast<size_t>(other)][static_cast<size_t>(l)];
                    for (int l = 0; l < n; ++l)
                        v -= pos_part(-fam_old.entry(n + l, kk)) * g_old[static_cast<size_t>(other)][static_cast<size_t>(l)] *
                             d[static_cast<size_t>(l)];
                }
                expect = (jj == kk) ? v : -v;
            }
            if (rho_[static_cast<size_t>(i)][static_cast<size_t>(jj)] != expect)
                throw std::logic_error("rho table recurrence disagrees with its definition");
        }
    }
    return f_[static_cast<size_t>(kk)];
}

void RecurrenceState::mutate_word(const MutationWord& word) {
    for (int k : word) mutate(k);
}

QFPoly right_fpoly(const QFPoly& f) {
    TorusElement out(f.context()->form);
    for (const auto& [a, c] : f.terms()) out.add_term(a, qlaurent_bar(c));
    return QFPoly::from_torus(f.context(), std::move(out));
}

bool coefficient_symmetry_check(const QFPoly& f, const GVec& g, const std::vector<std::int64_t>& d) {
    for (const auto& [a, c] : f.terms()) {
        const std::int64_t gad = dot3(g, a, d);
        if (!(c == qlaurent_bar(c).shifted(HalfInt(-2 * gad)))) return false;
        HalfInt e;
        Int coeff;
        if (c.is_monomial(&e, &coeff) && coeff == 1) {
            if (e.twice != -gad) return false;
        }
    }
    return true;
}

HalfInt verify_general_coefficients(const SkewForm& lambda0, const IntMat& btilde0, const MutationWord& word, int j) {
    QuantumSeed seed = QuantumSeed::initial(lambda0, btilde0);
    const ExchangeData& ex = seed.initial_exchange();
    const int n = ex.cols();
    if (j < 1 || j > n) throw BadDirection("cluster index out of range");

    QuantumSeed at_t = seed.mutate_word(word);
    const TorusElement& x = at_t.cluster_var(j);

    IntMat b0 = ex.principal_part();
    ExtractResult ext = extract_qfpoly(b0, ex.d(), SkewForm::zero(n), word, j);
    GVec gext = extended_g_vectors(ex, word)[static_cast<size_t>(j - 1)];

    TorusElement rhs = substitute_yhat(ext.fpoly, ex, seed.initial_form()) *
                       TorusElement::monomial(seed.initial_form(), gext);

    if (x.terms().size() != rhs.terms().size())
        throw NotProportional("cluster variable and F(Yhat) M_0(g) have different supports");
    bool have = false;
    HalfInt lambda;
    auto it_x = x.terms().begin();
    auto it_r = rhs.terms().begin();
    for (; it_x != x.terms().end(); ++it_x, ++it_r) {
        if (it_x->first != it_r->first)
            throw NotProportional("cluster variable and F(Yhat) M_0(g) have different supports");
        QLaurent ratio = qlaurent_exact_div(it_x->second, it_r->second);
        HalfInt e;
        Int c;
        if (!ratio.is_monomial(&e, &c) || c != 1) throw NotProportional("termwise quotient is not a power of q");
        if (!have) {
            lambda = e;
            have = true;
        } else if (!(lambda == e)) {
            throw NotProportional("termwise quotients differ between terms");
        }
    }
    if (!have) throw NotProportional("cluster variable vanished");

    // When every classical F-polynomial met along the word has a nonzero
    // constant term, lambda must be zero.
    bool all_nonzero = true;
    for (size_t len = 0; len <= word.size() && all_nonzero; ++len) {
        MutationWord prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(len));
        for (const CommPoly& f : classical_f_polys(b0, prefix))
            if (f.constant_term() == 0) all_nonzero = false;
    }
    if (all_nonzero && lambda.twice != 0)
        throw std::logic_error("nonzero q-shift despite nonzero classical constant terms");
    return lambda;
}

}  // namespace qca
