#pragma once

#include <map>
#include <string>
#include <vector>

#include "qca/exchange.hpp"
#include "qca/qlaurent.hpp"

namespace qca {

/// Sparse polynomial in u_1..u_n over Z with nonnegative exponents; the
/// commutative side of the engine, kept code-independent from the quantum
/// torus so the two routes can check each other.
class CommPoly {
public:
    using TermMap = std::map<std::vector<std::int64_t>, Int>;

    CommPoly() = default;
    explicit CommPoly(int n_vars) : n_(n_vars) {}

    static CommPoly constant(int n_vars, Int c);
    static CommPoly one(int n_vars) { return constant(n_vars, 1); }
    static CommPoly variable(int n_vars, int j);  // u_j, 1-based
    static CommPoly monomial(int n_vars, std::vector<std::int64_t> exp, Int c);

    int vars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    Int constant_term() const;

    CommPoly& operator+=(const CommPoly& o);
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    CommPoly pow(std::int64_t k) const;

    friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    std::string str() const;

    void add_term(const std::vector<std::int64_t>& e, const Int& c);

private:
    int n_ = 0;
    TermMap terms_;
};

/// Exact quotient a / b; throws InexactDivision if the quotient is not a
/// polynomial over Z.
CommPoly comm_exact_div(const CommPoly& a, const CommPoly& b);

using GVec = std::vector<std::int64_t>;
using DVec = std::vector<std::int64_t>;

/// F_{1;t},...,F_{n;t} at the endpoint of the word, via the principal-matrix
/// recurrence with initial conditions F = 1.
std::vector<CommPoly> classical_f_polys(const IntMat& b0, const MutationWord& word);

/// g-vectors at the endpoint; evaluates the recurrence at both signs and
/// throws EpsilonMismatch if they ever disagree.
std::vector<GVec> g_vectors(const IntMat& b0, const MutationWord& word);

/// Extended g-vectors in Z^m for an arbitrary exchange matrix; the principal
/// 2n x n companion family is co-mutated, as the recurrence requires.
std::vector<GVec> extended_g_vectors(const ExchangeData& btilde, const MutationWord& word);

/// Denominator vectors at the endpoint, initial value -e_j.
std::vector<DVec> denominator_vectors(const IntMat& b0, const MutationWord& word);

}  // namespace qca
