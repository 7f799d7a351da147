#include "qca/exchange.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "qca/errors.hpp"

namespace qca {

MutationWord reduced_word(const MutationWord& w) {
    MutationWord out;
    for (int k : w) {
        if (!out.empty() && out.back() == k)
            out.pop_back();
        else
            out.push_back(k);
    }
    return out;
}

std::optional<std::vector<std::int64_t>> find_skew_symmetrizer(const IntMat& b) {
    const size_t n = b.size();
    for (const auto& row : b)
        if (row.size() != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i) {
        if (b[i][i] != 0) return std::nullopt;
        for (size_t j = 0; j < n; ++j)
            if (sgn(b[i][j]) != -sgn(b[j][i])) return std::nullopt;
    }
    // d_i b_ij = -d_j b_ji forces the ratio d_i / d_j on every edge of the
    // graph {b_ij != 0}; propagate rational weights per component, then clear
    // denominators with the lcm.
    std::vector<std::int64_t> num(n, 0), den(n, 0);
    std::vector<std::int64_t> d(n, 0);
    std::vector<size_t> stack;
    for (size_t root = 0; root < n; ++root) {
        if (num[root] != 0) continue;
        num[root] = den[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < n; ++j) {
                if (b[i][j] == 0) continue;
                // d_j = d_i * |b_ij| / |b_ji|
                std::int64_t nj = num[i] * std::abs(b[i][j]);
                std::int64_t dj = den[i] * std::abs(b[j][i]);
                std::int64_t g = std::gcd(nj, dj);
                nj /= g;
                dj /= g;
                if (num[j] == 0) {
                    num[j] = nj;
                    den[j] = dj;
                    stack.push_back(j);
                } else if (num[j] * dj != nj * den[j]) {
                    return std::nullopt;  // inconsistent cycle
                }
            }
        }
    }
    std::int64_t l = 1;
    for (size_t i = 0; i < n; ++i) l = std::lcm(l, den[i]);
    for (size_t i = 0; i < n; ++i) d[i] = num[i] * (l / den[i]);
    std::int64_t g = 0;
    for (auto x : d) g = std::gcd(g, x);
    if (g > 1)
        for (auto& x : d) x /= g;
    // Final verification over all pairs (catches cross-component zeros too).
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (d[i] * b[i][j] != -d[j] * b[j][i]) return std::nullopt;
    return d;
}

ExchangeData::ExchangeData(IntMat btilde, std::vector<std::int64_t> d) : btilde_(std::move(btilde)), d_(std::move(d)) {
    m_ = static_cast<int>(btilde_.size());
    n_ = m_ ? static_cast<int>(btilde_[0].size()) : 0;
    if (m_ < n_) throw BadInput("exchange matrix needs at least as many rows as columns");
    if (static_cast<int>(d_.size()) != n_) throw BadInput("skew-symmetrizer length does not match column count");
    for (const auto& row : btilde_)
        if (static_cast<int>(row.size()) != n_) throw BadInput("ragged exchange matrix");
    for (int j = 0; j < n_; ++j)
        if (d_[static_cast<size_t>(j)] <= 0) throw BadInput("skew-symmetrizer entries must be positive");
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (d_[static_cast<size_t>(i)] * entry(i, j) != -d_[static_cast<size_t>(j)] * entry(j, i))
                throw NotSkewSymmetrizable("principal part violates d_i b_ij = -d_j b_ji at (" + std::to_string(i + 1) +
                                           "," + std::to_string(j + 1) + ")");
}

namespace {
std::vector<std::int64_t> symmetrizer_or_throw(const IntMat& btilde) {
    const size_t m = btilde.size();
    const size_t n = m ? btilde[0].size() : 0;
    if (m < n) throw BadInput("exchange matrix needs at least as many rows as columns");
    IntMat principal(n, std::vector<std::int64_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) principal[i][j] = btilde[i][j];
    auto d = find_skew_symmetrizer(principal);
    if (!d) throw NotSkewSymmetrizable("principal part admits no positive skew-symmetrizer");
    return *d;
}
}  // namespace

ExchangeData::ExchangeData(IntMat btilde) : ExchangeData(btilde, symmetrizer_or_throw(btilde)) {}

ExchangeData ExchangeData::principal(const IntMat& b0, std::vector<std::int64_t> d) {
    const size_t n = b0.size();
    IntMat m(2 * n, std::vector<std::int64_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = b0[i][j];
    for (size_t j = 0; j < n; ++j) m[n + j][j] = 1;
    return ExchangeData(std::move(m), std::move(d));
}

ExchangeData ExchangeData::principal(const IntMat& b0) { return principal(b0, symmetrizer_or_throw(b0)); }

IntMat ExchangeData::principal_part() const {
    IntMat b(static_cast<size_t>(n_), std::vector<std::int64_t>(static_cast<size_t>(n_), 0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) b[static_cast<size_t>(i)][static_cast<size_t>(j)] = entry(i, j);
    return b;
}

ExpVec ExchangeData::column(int j) const {
    ExpVec c(static_cast<size_t>(m_), 0);
    for (int i = 0; i < m_; ++i) c[static_cast<size_t>(i)] = entry(i, j);
    return c;
}

ExchangeData matrix_mutate(const ExchangeData& b, int k) {
    if (k < 1 || k > b.cols()) throw BadDirection("mutation direction out of range");
    const int kk = k - 1;
    IntMat out = b.btilde();
    for (int i = 0; i < b.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            if (i == kk || j == kk) {
                out[static_cast<size_t>(i)][static_cast<size_t>(j)] = -b.entry(i, j);
            } else {
                out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    b.entry(i, j) + sgn(b.entry(i, kk)) * pos_part(b.entry(i, kk) * b.entry(kk, j));
            }
        }
    }
    return ExchangeData(std::move(out), b.d());
}

ExchangeData matrix_mutate_word(ExchangeData b, const MutationWord& word) {
    for (int k : word) b = matrix_mutate(b, k);
    return b;
}

}  // namespace qca
