#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qca/torus.hpp"

namespace qca {

/// Path in the n-regular tree: ordered mutation directions, 1-based.
using MutationWord = std::vector<int>;

/// Cancel adjacent duplicate directions (mutation is involutive).
MutationWord reduced_word(const MutationWord& w);

constexpr std::int64_t pos_part(std::int64_t x) { return x > 0 ? x : 0; }
constexpr int sgn(std::int64_t x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

/// Smallest positive diagonal D with D * B skew-symmetric, or nullopt when B
/// is not skew-symmetrizable.
std::optional<std::vector<std::int64_t>> find_skew_symmetrizer(const IntMat& b);

/// An m x n exchange matrix whose principal (top n x n) part is
/// skew-symmetrizable, together with the diagonal skew-symmetrizer D.
class ExchangeData {
public:
    /// Validates m >= n and d_i b_ij = -d_j b_ji on the principal part.
    ExchangeData(IntMat btilde, std::vector<std::int64_t> d);

    /// Computes the minimal skew-symmetrizer itself.
    explicit ExchangeData(IntMat btilde);

    /// The 2n x n principal-coefficient matrix [B; I].
    static ExchangeData principal(const IntMat& b0, std::vector<std::int64_t> d);
    static ExchangeData principal(const IntMat& b0);

    int rows() const { return m_; }
    int cols() const { return n_; }
    std::int64_t entry(int i, int j) const { return btilde_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const IntMat& btilde() const { return btilde_; }
    const std::vector<std::int64_t>& d() const { return d_; }

    /// Top n x n block.
    IntMat principal_part() const;

    /// Column j of btilde (0-based j), as a length-m exponent vector.
    ExpVec column(int j) const;

    friend bool operator==(const ExchangeData&, const ExchangeData&) = default;

private:
    IntMat btilde_;
    std::vector<std::int64_t> d_;
    int m_ = 0, n_ = 0;
};

/// Matrix mutation in direction k (1-based).  Involutive.
ExchangeData matrix_mutate(const ExchangeData& b, int k);

/// Mutation along a whole word.
ExchangeData matrix_mutate_word(ExchangeData b, const MutationWord& word);

}  // namespace qca
