#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qca/classical.hpp"
#include "qca/seed.hpp"

namespace qca {

/// The quasi-commutation context of the Z-variables: Z_i Z_j = q^{d_i b0_ij} Z_j Z_i.
struct ZContext {
    IntMat b0;
    std::vector<std::int64_t> d;
    SkewFormPtr form;  // n x n form with entries d_i * b0_ij

    static std::shared_ptr<const ZContext> make(IntMat b0, std::vector<std::int64_t> d);

    int n() const { return static_cast<int>(b0.size()); }
    friend bool operator==(const ZContext& a, const ZContext& b) { return a.b0 == b.b0 && a.d == b.d; }
};

using ZContextPtr = std::shared_ptr<const ZContext>;

/// Quantum F-polynomial: a Z[q^{+-1/2}]-combination of normalized monomials
/// Z^a with nonnegative exponent vectors, living in the Z-quasi-commutation
/// context of its initial matrix.
class QFPoly {
public:
    QFPoly() = default;

    static QFPoly one(ZContextPtr ctx);
    static QFPoly zero(ZContextPtr ctx);
    static QFPoly monomial(ZContextPtr ctx, ExpVec a, QLaurent c = QLaurent(1));

    /// Wraps a torus element over ctx->form; throws NegativeExponent unless
    /// every exponent is nonnegative.
    static QFPoly from_torus(ZContextPtr ctx, TorusElement t);

    const ZContextPtr& context() const { return ctx_; }
    const TorusElement& element() const { return elem_; }
    const TorusElement::TermMap& terms() const { return elem_.terms(); }
    int vars() const { return ctx_ ? ctx_->n() : 0; }
    bool is_zero() const { return elem_.is_zero(); }
    bool is_one() const { return elem_.is_one(); }

    friend QFPoly operator+(const QFPoly& a, const QFPoly& b);
    friend QFPoly operator*(const QFPoly& a, const QFPoly& b);
    QFPoly scaled(const QLaurent& c) const;

    friend bool operator==(const QFPoly& a, const QFPoly& b);

    /// q = 1, Z -> u specialization.
    CommPoly classical_specialization() const;

    std::string str() const;

private:
    ZContextPtr ctx_;
    TorusElement elem_;
};

/// Coefficient twist F' with M_0(a) F(Yhat) = F'(Yhat) M_0(a):
/// Z^b picks up q^{-(a.b.d)}.
QFPoly l_apply(const std::vector<std::int64_t>& a, const QFPoly& f);

/// Z^a -> X^{Btilde0 * a} with coefficients unchanged; lands in the torus of
/// lambda0 (the compatibility condition makes this a homomorphism on
/// normalized monomials).
TorusElement substitute_yhat(const QFPoly& f, const ExchangeData& btilde0, const SkewFormPtr& lambda0);

struct ExtractResult {
    QFPoly fpoly;
    GVec gvec;
};

/// F_{j;t} and g_{j;t} from the principal quantization: mutates the seed
/// along the word, strips M_0(g), and converts torus exponents back to
/// Z-exponents through the principal matrix's identity block.
ExtractResult extract_qfpoly(const IntMat& b0, const std::vector<std::int64_t>& d, const SkewForm& lam,
                             const MutationWord& word, int j);

/// Everything the quantum F-polynomial recurrence maintains while walking a
/// word: the polynomials, g-vectors, mutated forms and the rho table of
/// quasi-commutation defects, cross-checked against its own recurrence.
class RecurrenceState {
public:
    RecurrenceState(IntMat b0, std::vector<std::int64_t> d, const SkewForm& lam);

    /// One edge of the tree; returns the freshly computed F_{k;t'}.
    const QFPoly& mutate(int k);
    void mutate_word(const MutationWord& word);

    const QFPoly& fpoly(int j) const { return f_[static_cast<size_t>(j - 1)]; }
    const GVec& gvec(int j) const { return g_[static_cast<size_t>(j - 1)]; }
    const ZContextPtr& context() const { return ctx_; }
    const MutationWord& word() const { return word_; }

    /// rho_{ij} = Lambda_t(e_i,e_j) - Lambda_0(gext_i, gext_j); integral, zero
    /// on frozen indices, identically zero at the initial vertex.
    std::int64_t rho(int i, int j) const { return rho_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }

private:
    std::vector<GVec> extended_g() const;
    std::vector<std::vector<std::int64_t>> rho_from_definition(const SkewForm& lambda_t,
                                                               const std::vector<GVec>& gext) const;

    ZContextPtr ctx_;
    ExchangeData fam_;   // 2n x n principal family at t
    SkewForm lambda0_;   // initial 2n x 2n form
    SkewForm lambda_t_;  // form at t
    std::vector<QFPoly> f_;
    std::vector<GVec> g_;
    std::vector<std::vector<std::int64_t>> rho_;
    MutationWord word_;
};

/// Bar applied to every coefficient; the unique polynomial with
/// X_{j;t} = M_0(g) Fbar(Yhat).
QFPoly right_fpoly(const QFPoly& f);

/// Checks P_a(q^{1/2}) = q^{-(g.a.d)} P_a(q^{-1/2}) for every coefficient and,
/// for pure q-power coefficients, that the exponent is -(g.a.d)/2.
bool coefficient_symmetry_check(const QFPoly& f, const GVec& g, const std::vector<std::int64_t>& d);

/// Solves X_{j;t} = q^lambda F_{j;t}(Yhat) M_0(gext) in the quantization
/// (lambda0, btilde0) and returns lambda.  Throws NotProportional when the
/// quotient is not a single power of q.
HalfInt verify_general_coefficients(const SkewForm& lambda0, const IntMat& btilde0, const MutationWord& word, int j);

}  // namespace qca
