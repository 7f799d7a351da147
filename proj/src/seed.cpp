#include "qca/seed.hpp"

#include <string>

#include "qca/errors.hpp"

namespace qca {

std::vector<std::int64_t> check_compatible(const SkewForm& lambda, const IntMat& btilde) {
    const int m = lambda.size();
    const int n = btilde.empty() ? 0 : static_cast<int>(btilde[0].size());
    if (static_cast<int>(btilde.size()) != m) throw NotCompatible("row count of Btilde differs from rank of Lambda");
    std::vector<std::int64_t> d(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
            std::int64_t s = 0;
            for (int k = 0; k < m; ++k) s += btilde[static_cast<size_t>(k)][static_cast<size_t>(j)] * lambda.entry(k, i);
            if (i == j) {
                if (s <= 0)
                    throw NotCompatible("diagonal entry d_" + std::to_string(j + 1) + " = " + std::to_string(s) +
                                        " is not positive");
                d[static_cast<size_t>(j)] = s;
            } else if (s != 0) {
                throw NotCompatible("compatibility product has nonzero off-diagonal entry at (" +
                                    std::to_string(j + 1) + "," + std::to_string(i + 1) + ")");
            }
        }
    }
    return d;
}

SkewForm principal_lambda(const IntMat& b0, const std::vector<std::int64_t>& d, const SkewForm& lam) {
    const int n = static_cast<int>(b0.size());
    if (lam.size() != n) throw BadInput("quasi-commutation block has wrong rank");
    auto B = [&](int i, int j) { return b0[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
    auto L = [&](int i, int j) { return lam.entry(i, j); };
    IntMat out(static_cast<size_t>(2 * n), std::vector<std::int64_t>(static_cast<size_t>(2 * n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // top-left: lam
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] = L(i, j);
            // top-right: -lam*B0 - D
            std::int64_t tr = 0;
            for (int k = 0; k < n; ++k) tr -= L(i, k) * B(k, j);
            if (i == j) tr -= d[static_cast<size_t>(j)];
            out[static_cast<size_t>(i)][static_cast<size_t>(n + j)] = tr;
            // bottom-left: -B0^T*lam + D
            std::int64_t bl = 0;
            for (int k = 0; k < n; ++k) bl -= B(k, i) * L(k, j);
            if (i == j) bl += d[static_cast<size_t>(j)];
            out[static_cast<size_t>(n + i)][static_cast<size_t>(j)] = bl;
            // bottom-right: B0^T*lam*B0 + B0^T*D
            std::int64_t br = 0;
            for (int k = 0; k < n; ++k) {
                std::int64_t lb = 0;
                for (int l = 0; l < n; ++l) lb += L(k, l) * B(l, j);
                br += B(k, i) * lb;
            }
            br += B(j, i) * d[static_cast<size_t>(j)];
            out[static_cast<size_t>(n + i)][static_cast<size_t>(n + j)] = br;
        }
    }
    return SkewForm(std::move(out));
}

SkewForm extended_compatible_lambda(const IntMat& b0, const std::vector<std::int64_t>& d, const IntMat& extra_rows,
                                    const SkewForm& lam11, const IntMat& lam13, const SkewForm& lam33) {
    const int n = static_cast<int>(b0.size());
    const int r = static_cast<int>(extra_rows.size());
    if (lam11.size() != n || lam33.size() != r) throw BadInput("free block has wrong rank");
    if (static_cast<int>(lam13.size()) != n) throw BadInput("lam13 must be n x r");
    for (const auto& row : lam13)
        if (static_cast<int>(row.size()) != r) throw BadInput("lam13 must be n x r");
    const int m = 2 * n + r;
    auto B = [&](int i, int j) { return b0[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
    auto R = [&](int i, int j) { return extra_rows[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
    auto L11 = [&](int i, int j) { return lam11.entry(i, j); };
    auto L13 = [&](int i, int j) { return lam13[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
    auto L33 = [&](int i, int j) { return lam33.entry(i, j); };
    // lam12 = -lam11*B0 - lam13*R - D;  lam23 = -B0^T*lam13 - R^T*lam33;
    // lam22 = -R^T lam13^T B0 + R^T lam33 R + B0^T lam11 B0 + B0^T lam13 R + B0^T D.
    IntMat out(static_cast<size_t>(m), std::vector<std::int64_t>(static_cast<size_t>(m), 0));
    auto set = [&](int i, int j, std::int64_t v) {
        out[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        out[static_cast<size_t>(j)][static_cast<size_t>(i)] = -v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) set(i, j, L11(i, j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) set(i, 2 * n + j, L13(i, j));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) set(2 * n + i, 2 * n + j, L33(i, j));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::int64_t v = 0;
            for (int k = 0; k < n; ++k) v -= L11(i, k) * B(k, j);
            for (int k = 0; k < r; ++k) v -= L13(i, k) * R(k, j);
            if (i == j) v -= d[static_cast<size_t>(j)];
            set(i, n + j, v);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < r; ++j) {
            std::int64_t v = 0;
            for (int k = 0; k < n; ++k) v -= B(k, i) * L13(k, j);
            for (int k = 0; k < r; ++k) v -= R(k, i) * L33(k, j);
            set(n + i, 2 * n + j, v);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::int64_t v = 0;
            for (int a = 0; a < r; ++a)
                for (int k = 0; k < n; ++k) v -= R(a, i) * L13(k, a) * B(k, j);
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) v += R(a, i) * L33(a, b) * R(b, j);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) v += B(k, i) * L11(k, l) * B(l, j);
            for (int k = 0; k < n; ++k)
                for (int a = 0; a < r; ++a) v += B(k, i) * L13(k, a) * R(a, j);
            v += B(j, i) * d[static_cast<size_t>(j)];
            set(n + i, n + j, v);
        }
    }
    return SkewForm(std::move(out));
}

SkewForm lambda_mutate(const SkewForm& lambda, const ExchangeData& exchange, int k, int epsilon) {
    if (k < 1 || k > exchange.cols()) throw BadDirection("mutation direction out of range");
    if (epsilon != 1 && epsilon != -1) throw BadInput("epsilon must be +1 or -1");
    const int m = lambda.size();
    const int kk = k - 1;
    // E column k:  -1 at (k,k), [-eps*b_ik]_+ elsewhere; identity columns otherwise.
    std::vector<std::int64_t> ecol(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        ecol[static_cast<size_t>(i)] = (i == kk) ? -1 : pos_part(-epsilon * exchange.entry(i, kk));
    IntMat out(static_cast<size_t>(m), std::vector<std::int64_t>(static_cast<size_t>(m), 0));
    // (E^T Lambda E)_{ij} with E sparse: differs from identity only in column k.
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            std::int64_t v;
            if (i != kk && j != kk) {
                v = lambda.entry(i, j);
            } else if (i == kk && j != kk) {
                v = 0;
                for (int a = 0; a < m; ++a) v += ecol[static_cast<size_t>(a)] * lambda.entry(a, j);
            } else if (i != kk && j == kk) {
                v = 0;
                for (int b = 0; b < m; ++b) v += lambda.entry(i, b) * ecol[static_cast<size_t>(b)];
            } else {
                v = 0;  // diagonal of a skew form
            }
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        }
    }
    return SkewForm(std::move(out));
}

SkewForm lambda_mutate_checked(const SkewForm& lambda, const ExchangeData& exchange, int k) {
    SkewForm plus = lambda_mutate(lambda, exchange, k, +1);
    SkewForm minus = lambda_mutate(lambda, exchange, k, -1);
    if (!(plus == minus)) throw EpsilonMismatch("Lambda-mutation differs between signs");
    return plus;
}

CompatiblePair CompatiblePair::make(SkewForm lambda, IntMat btilde) {
    std::vector<std::int64_t> d = check_compatible(lambda, btilde);
    return CompatiblePair{std::move(lambda), ExchangeData(std::move(btilde), std::move(d))};
}

CompatiblePair pair_mutate(const CompatiblePair& pair, int k) {
    SkewForm lam = lambda_mutate_checked(pair.lambda, pair.exchange, k);
    ExchangeData ex = matrix_mutate(pair.exchange, k);
    // Mutation preserves compatibility with the same D; re-validate.
    std::vector<std::int64_t> d = check_compatible(lam, ex.btilde());
    if (d != ex.d()) throw NotCompatible("mutation changed the skew-symmetrizing diagonal");
    return CompatiblePair{std::move(lam), std::move(ex)};
}

QuantumSeed QuantumSeed::initial(SkewForm lambda0, IntMat btilde0) {
    CompatiblePair pair = CompatiblePair::make(std::move(lambda0), std::move(btilde0));
    auto form = std::make_shared<const SkewForm>(pair.lambda);
    const int m = pair.m();
    std::vector<TorusElement> cluster;
    cluster.reserve(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) cluster.push_back(TorusElement::monomial(form, unit_vec(m, j)));
    ExchangeData ex0 = pair.exchange;
    return QuantumSeed(std::move(pair), std::move(form), std::move(ex0), std::move(cluster), MutationWord{});
}

QuantumSeed QuantumSeed::principal(const IntMat& b0, const std::vector<std::int64_t>& d, const SkewForm& lam) {
    SkewForm lambda0 = principal_lambda(b0, d, lam);
    return initial(std::move(lambda0), ExchangeData::principal(b0, d).btilde());
}

TorusElement QuantumSeed::monomial(const ExpVec& c) const {
    const int m = pair_.m();
    if (static_cast<int>(c.size()) != m) throw RankMismatch("exponent length does not match seed rank");
    int neg_at = -1;
    for (int i = 0; i < m; ++i) {
        std::int64_t ci = c[static_cast<size_t>(i)];
        if (ci >= 0) continue;
        if (ci < -1 || neg_at >= 0)
            throw UnsupportedExponent("frame evaluation supports at most one -1 exponent entry");
        neg_at = i;
    }
    const HalfInt prefix(normalization_shift_twice(pair_.lambda, c));
    TorusElement left = TorusElement::scalar(initial_form_, QLaurent::q_power(prefix));
    TorusElement right = TorusElement::one(initial_form_);
    for (int i = 0; i < m; ++i) {
        std::int64_t ci = c[static_cast<size_t>(i)];
        if (ci <= 0) continue;
        TorusElement& dst = (neg_at >= 0 && i > neg_at) ? right : left;
        dst *= torus_pow(cluster_[static_cast<size_t>(i)], ci);
    }
    if (neg_at < 0) return left * right;
    return left * exact_left_divide(cluster_[static_cast<size_t>(neg_at)], right);
}

QuantumSeed QuantumSeed::mutate(int k) const {
    const int m = pair_.m(), n = pair_.n();
    if (k < 1 || k > n) throw BadDirection("mutation direction out of range");
    const int kk = k - 1;
    // X'_k = M_t(-e_k + sum [b_ik]_+ e_i) + M_t(-e_k + sum [-b_ik]_+ e_i).
    // The two frame monomials need not lie in the initial torus individually,
    // only their sum does; so both are rewritten over the common left factor
    // X_{k;t}^{-1} and the division happens once, on the sum.
    TorusElement numerator(initial_form_);
    for (int eps : {+1, -1}) {
        ExpVec c(static_cast<size_t>(m), 0);
        for (int i = 0; i < m; ++i) c[static_cast<size_t>(i)] = pos_part(eps * pair_.exchange.entry(i, kk));
        c[static_cast<size_t>(kk)] -= 1;
        // q-cost of moving X_k^{-1} from its slot to the far left.
        std::int64_t swap_twice = 0;
        for (int i = 0; i < kk; ++i)
            swap_twice -= 2 * c[static_cast<size_t>(i)] * pair_.lambda.entry(i, kk);
        const HalfInt shift(normalization_shift_twice(pair_.lambda, c) + swap_twice);
        TorusElement prod = TorusElement::scalar(initial_form_, QLaurent::q_power(shift));
        for (int i = 0; i < m; ++i) {
            std::int64_t ci = c[static_cast<size_t>(i)];
            if (ci > 0) prod *= torus_pow(cluster_[static_cast<size_t>(i)], ci);
        }
        numerator += prod;
    }
    TorusElement x_new = exact_left_divide(cluster_[static_cast<size_t>(kk)], numerator);
    std::vector<TorusElement> cluster = cluster_;
    cluster[static_cast<size_t>(kk)] = std::move(x_new);
    MutationWord word = word_;
    word.push_back(k);
    return QuantumSeed(pair_mutate(pair_, k), initial_form_, initial_exchange_, std::move(cluster),
                       reduced_word(word));
}

QuantumSeed QuantumSeed::mutate_word(const MutationWord& word) const {
    QuantumSeed s = *this;
    for (int k : word) s = s.mutate(k);
    return s;
}

TorusElement torus_inverse(const TorusElement& a) {
    return exact_left_divide(a, TorusElement::one(a.form()));
}

std::vector<std::optional<TorusElement>> yhats_by_recurrence(const QuantumSeed& seed) {
    const int n = seed.n();
    const auto& form = seed.initial_form();
    std::vector<std::optional<TorusElement>> y(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        y[static_cast<size_t>(j)] = TorusElement::monomial(form, seed.initial_exchange().column(j));
    ExchangeData ex = seed.initial_exchange();
    for (int k : seed.word()) {
        const int kk = k - 1;
        const std::int64_t dk = ex.d()[static_cast<size_t>(kk)];
        std::vector<std::optional<TorusElement>> next(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            const auto& yj = y[static_cast<size_t>(j)];
            const auto& yk = y[static_cast<size_t>(kk)];
            try {
                if (j == kk) {
                    if (yk) next[static_cast<size_t>(j)] = torus_inverse(*yk);
                    continue;
                }
                const std::int64_t b = ex.entry(kk, j);
                if (b == 0) {
                    next[static_cast<size_t>(j)] = yj;
                } else if (b < 0) {
                    if (!yj || !yk) continue;
                    TorusElement acc = *yj;
                    for (std::int64_t p = 0; p < -b; ++p) {
                        TorusElement factor = TorusElement::one(form) +
                                              yk->scaled(QLaurent::q_power(HalfInt(-2 * dk * p - dk)));
                        acc *= factor;
                    }
                    next[static_cast<size_t>(j)] = std::move(acc);
                } else {
                    if (!yj || !yk) continue;
                    TorusElement acc = *yj * torus_pow(*yk, b);
                    for (std::int64_t p = 0; p < b; ++p) {
                        TorusElement factor =
                            *yk + TorusElement::scalar(form, QLaurent::q_power(HalfInt(-2 * dk * p - dk)));
                        acc = exact_right_divide(factor, acc);
                    }
                    next[static_cast<size_t>(j)] = std::move(acc);
                }
            } catch (const NotDivisible&) {
                // Element left the torus; recorded as unavailable.
            }
        }
        y = std::move(next);
        ex = matrix_mutate(ex, k);
    }
    return y;
}

TorusElement yhat_current(const QuantumSeed& seed, int j) {
    if (j < 1 || j > seed.n()) throw BadDirection("Yhat index out of range");
    const ExpVec col = seed.pair().exchange.column(j - 1);
    int negatives = 0;
    bool monomial_ok = true;
    for (auto x : col) {
        if (x < -1) monomial_ok = false;
        if (x < 0) ++negatives;
    }
    monomial_ok = monomial_ok && negatives <= 1;
    std::optional<TorusElement> direct;
    if (monomial_ok) direct = seed.monomial(col);
    auto rec = yhats_by_recurrence(seed)[static_cast<size_t>(j - 1)];
    if (direct && rec && !(*direct == *rec))
        throw NotDivisible("frame evaluation and recurrence disagree on Yhat");
    if (rec) return *rec;
    if (direct) return *direct;
    throw NotDivisible("Yhat element does not lie in the initial torus");
}

TorusElement frame_mutation_raw(const QuantumSeed& seed, int k, int epsilon, const ExpVec& c) {
    const int m = seed.m(), n = seed.n();
    if (k < 1 || k > n) throw BadDirection("mutation direction out of range");
    if (epsilon != 1 && epsilon != -1) throw BadInput("epsilon must be +1 or -1");
    const int kk = k - 1;
    for (auto x : c)
        if (x < 0) throw UnsupportedExponent("raw frame mutation requires nonnegative exponents");
    const std::int64_t ck = c[static_cast<size_t>(kk)];
    const std::int64_t dk = seed.pair().exchange.d()[static_cast<size_t>(kk)];
    const ExpVec bk = seed.pair().exchange.column(kk);
    // E_eps * c  (E differs from the identity only in column k).
    ExpVec base(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        if (i == kk)
            base[static_cast<size_t>(i)] = -ck;
        else
            base[static_cast<size_t>(i)] =
                c[static_cast<size_t>(i)] + pos_part(-epsilon * seed.pair().exchange.entry(i, kk)) * ck;
    }
    TorusElement sum(seed.initial_form());
    for (std::int64_t p = 0; p <= ck; ++p) {
        ExpVec arg = vec_add(base, vec_scaled(bk, epsilon * p));
        QLaurent coeff = t_binomial(static_cast<int>(ck), static_cast<int>(p), static_cast<int>(dk));
        sum += seed.monomial(arg).scaled(coeff);
    }
    return sum;
}

std::shared_ptr<const QuantumSeed> SeedCache::at(const MutationWord& word) {
    MutationWord key = reduced_word(word);
    std::scoped_lock lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    // Build from the longest cached prefix.
    MutationWord prefix = key;
    std::shared_ptr<const QuantumSeed> base;
    while (!prefix.empty()) {
        prefix.pop_back();
        auto pit = cache_.find(prefix);
        if (pit != cache_.end()) {
            base = pit->second;
            break;
        }
    }
    QuantumSeed cur = base ? *base : initial_;
    for (size_t i = cur.word().size(); i < key.size(); ++i) {
        cur = cur.mutate(key[i]);
        cache_.emplace(MutationWord(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(i) + 1),
                       std::make_shared<const QuantumSeed>(cur));
    }
    auto fit = cache_.find(key);
    if (fit != cache_.end()) return fit->second;
    auto sp = std::make_shared<const QuantumSeed>(std::move(cur));
    cache_.emplace(std::move(key), sp);
    return sp;
}

}  // namespace qca
