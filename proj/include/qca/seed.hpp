#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qca/classical.hpp"
#include "qca/exchange.hpp"
#include "qca/torus.hpp"

namespace qca {

/// Verifies btilde^T * lambda = (D | 0) with positive diagonal; returns the
/// recovered diagonal.  Throws NotCompatible naming the first failing entry.
std::vector<std::int64_t> check_compatible(const SkewForm& lambda, const IntMat& btilde);

/// The unique 2n x 2n form compatible with the principal matrix [B0; I] whose
/// top-left block is lam:
///   [ lam,              -lam*B0 - D        ]
///   [ -B0^T*lam + D,     B0^T*lam*B0 + B0^T*D ]
SkewForm principal_lambda(const IntMat& b0, const std::vector<std::int64_t>& d, const SkewForm& lam);

/// A compatible (2n+r) x (2n+r) form for the matrix [B0; I; R] stacked from
/// the principal matrix and r extra frozen rows R.  The free blocks lam11
/// (skew n x n), lam13 (n x r) and lam33 (skew r x r) parameterize a family
/// of valid quantizations; the remaining blocks are solved for.
SkewForm extended_compatible_lambda(const IntMat& b0, const std::vector<std::int64_t>& d, const IntMat& extra_rows,
                                    const SkewForm& lam11, const IntMat& lam13, const SkewForm& lam33);

/// E_eps^T * Lambda * E_eps for one sign choice.
SkewForm lambda_mutate(const SkewForm& lambda, const ExchangeData& exchange, int k, int epsilon);

/// Both signs, with an EpsilonMismatch check; this is the mutation used by
/// pair and seed mutation.
SkewForm lambda_mutate_checked(const SkewForm& lambda, const ExchangeData& exchange, int k);

/// A compatible pair (Lambda, Btilde); D is recovered from the compatibility
/// product and stored in the exchange data.
struct CompatiblePair {
    SkewForm lambda;
    ExchangeData exchange;

    static CompatiblePair make(SkewForm lambda, IntMat btilde);

    int m() const { return lambda.size(); }
    int n() const { return exchange.cols(); }
};

CompatiblePair pair_mutate(const CompatiblePair& pair, int k);

/// A quantum seed: the compatible pair at the current vertex together with
/// the expansions of the current extended cluster in the initial torus.
class QuantumSeed {
public:
    static QuantumSeed initial(SkewForm lambda0, IntMat btilde0);

    /// Principal-coefficient seed for (b0, d) with top-left quasi-commutation
    /// block lam (lam = 0 is the default quantization).
    static QuantumSeed principal(const IntMat& b0, const std::vector<std::int64_t>& d, const SkewForm& lam);

    const CompatiblePair& pair() const { return pair_; }
    const SkewFormPtr& initial_form() const { return initial_form_; }
    const ExchangeData& initial_exchange() const { return initial_exchange_; }
    const std::vector<TorusElement>& cluster() const { return cluster_; }
    const TorusElement& cluster_var(int j) const { return cluster_[static_cast<size_t>(j - 1)]; }
    const MutationWord& word() const { return word_; }
    int m() const { return pair_.m(); }
    int n() const { return pair_.n(); }

    /// M_t(c) expanded in the initial torus.  Entries of c must be
    /// nonnegative except for at most one -1.
    TorusElement monomial(const ExpVec& c) const;

    QuantumSeed mutate(int k) const;
    QuantumSeed mutate_word(const MutationWord& word) const;

private:
    CompatiblePair pair_;
    SkewFormPtr initial_form_;
    ExchangeData initial_exchange_;
    std::vector<TorusElement> cluster_;
    MutationWord word_;

    QuantumSeed(CompatiblePair pair, SkewFormPtr initial_form, ExchangeData initial_exchange,
                std::vector<TorusElement> cluster, MutationWord word)
        : pair_(std::move(pair)),
          initial_form_(std::move(initial_form)),
          initial_exchange_(std::move(initial_exchange)),
          cluster_(std::move(cluster)),
          word_(std::move(word)) {}
};

/// X^e -> X^{-e} when the element is a single unit-coefficient monomial;
/// NotDivisible otherwise (the inverse then lies outside the torus).
TorusElement torus_inverse(const TorusElement& a);

/// All Yhat_{j;t} built by replaying the mutation recurrence from the initial
/// basis monomials X^{btilde-column}.  An entry is nullopt when the element
/// leaves the torus (its recurrence step needs a non-monomial inverse).
std::vector<std::optional<TorusElement>> yhats_by_recurrence(const QuantumSeed& seed);

/// Yhat_{j;t} = M_t(column j of Btilde^t): direct frame evaluation when the
/// column has at most one -1 entry, otherwise the recurrence route.  The two
/// routes are cross-checked when both apply.
TorusElement yhat_current(const QuantumSeed& seed, int j);

/// Raw toric-frame mutation sum (test support): the q-binomial expansion of
/// the mutated frame at c, evaluated through the current seed.  Requires all
/// entries of c nonnegative, and enough positivity for the frame evaluations
/// to stay inside the single -1 domain of monomial().
TorusElement frame_mutation_raw(const QuantumSeed& seed, int k, int epsilon, const ExpVec& c);

/// Word-keyed seed cache with get-or-insert semantics; words are stored in
/// reduced form.
class SeedCache {
public:
    explicit SeedCache(QuantumSeed initial) : initial_(std::move(initial)) {}

    std::shared_ptr<const QuantumSeed> at(const MutationWord& word);

private:
    QuantumSeed initial_;
    std::map<MutationWord, std::shared_ptr<const QuantumSeed>> cache_;
    std::mutex mu_;
};

}  // namespace qca
