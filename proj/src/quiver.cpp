#include "qca/quiver.hpp"

#include <algorithm>
#include <string>

#include "qca/errors.hpp"

namespace qca {

Quiver::Quiver(int n, std::vector<std::pair<int, int>> arcs) : n_(n), arcs_(std::move(arcs)) {
    for (auto [i, j] : arcs_) {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw BadInput("arc endpoint out of range");
        if (i == j) throw BadInput("loops are not allowed");
    }
    std::sort(arcs_.begin(), arcs_.end());
    for (auto [i, j] : arcs_)
        if (arc_count(j, i) > 0) throw BadInput("2-cycles are not allowed");
}

Quiver Quiver::from_matrix(const IntMat& b) {
    const int n = static_cast<int>(b.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b[static_cast<size_t>(i)][static_cast<size_t>(j)] != -b[static_cast<size_t>(j)][static_cast<size_t>(i)])
                throw NotSkewSymmetric("quiver requires a skew-symmetric matrix");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t v = b[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (std::int64_t c = 0; c < -v; ++c) arcs.emplace_back(i + 1, j + 1);
        }
    return Quiver(n, std::move(arcs));
}

int Quiver::arc_count(int i, int j) const {
    auto lo = std::lower_bound(arcs_.begin(), arcs_.end(), std::make_pair(i, j));
    auto hi = std::upper_bound(arcs_.begin(), arcs_.end(), std::make_pair(i, j));
    return static_cast<int>(hi - lo);
}

int Quiver::degree(int v) const {
    int d = 0;
    for (auto [i, j] : arcs_)
        if (i == v || j == v) ++d;
    return d;
}

bool Quiver::simple() const {
    for (size_t i = 1; i < arcs_.size(); ++i)
        if (arcs_[i] == arcs_[i - 1]) return false;
    return true;
}

IntMat Quiver::matrix() const {
    IntMat b(static_cast<size_t>(n_), std::vector<std::int64_t>(static_cast<size_t>(n_), 0));
    for (auto [i, j] : arcs_) {
        b[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] -= 1;
        b[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] += 1;
    }
    return b;
}

TreeSubset TreeSubset::make(std::vector<int> vertices, const Quiver& q) {
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 1 || vertices[i] > q.vertex_count()) throw BadInput("tree vertex out of range");
        for (size_t l = 0; l < i; ++l)
            if (vertices[l] == vertices[i]) throw BadInput("tree vertex listed twice");
        if (i == 0) continue;
        int attach = 0;
        for (size_t l = 0; l < i; ++l) attach += q.arc_count(vertices[i], vertices[l]) + q.arc_count(vertices[l], vertices[i]);
        if (attach != 1)
            throw BadInput("vertex " + std::to_string(vertices[i]) + " is not a leaf of its prefix tree");
    }
    return TreeSubset(std::move(vertices));
}

TreeSubset TreeSubset::ordered(const std::set<int>& vertices, const Quiver& q) {
    std::vector<int> order;
    if (vertices.empty()) return TreeSubset(order);
    std::set<int> left = vertices;
    order.push_back(*left.begin());
    left.erase(left.begin());
    // Grow the tree one adjacent vertex at a time; each new vertex is then a
    // leaf of the grown prefix.
    while (!left.empty()) {
        bool grew = false;
        for (int v : left) {
            int attach = 0;
            for (int u : order) attach += q.arc_count(u, v) + q.arc_count(v, u);
            if (attach == 1) {
                order.push_back(v);
                left.erase(v);
                grew = true;
                break;
            }
            if (attach > 1) throw BadInput("vertex set does not induce a tree");
        }
        if (!grew) throw BadInput("vertex set does not induce a tree");
    }
    return make(std::move(order), q);
}

TreeSubset TreeSubset::chain(const std::set<int>& vertices, const Quiver& q) {
    std::vector<int> order;
    if (vertices.empty()) return TreeSubset(order);
    auto deg_in = [&](int v) {
        int d = 0;
        for (int u : vertices)
            if (u != v) d += q.arc_count(u, v) + q.arc_count(v, u);
        return d;
    };
    int start = -1;
    for (int v : vertices) {
        int d = deg_in(v);
        if (d > 2) throw BadInput("vertex set does not induce a chain");
        if (d <= 1 && start < 0) start = v;
    }
    if (start < 0) throw BadInput("vertex set does not induce a chain");
    std::set<int> left = vertices;
    int cur = start;
    order.push_back(cur);
    left.erase(cur);
    while (!left.empty()) {
        int next = -1;
        for (int v : left) {
            if (q.arc_count(cur, v) + q.arc_count(v, cur) > 0) {
                if (next >= 0) throw BadInput("vertex set does not induce a chain");
                next = v;
            }
        }
        if (next < 0) throw BadInput("vertex set does not induce a chain");
        order.push_back(next);
        left.erase(next);
        cur = next;
    }
    return make(std::move(order), q);
}

bool TreeSubset::contains(int v) const { return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end(); }

std::vector<ClosedSubset> closed_subsets(const TreeSubset& t, const Quiver& q) {
    std::vector<int> vs = t.vertices();
    std::sort(vs.begin(), vs.end());
    const int l = static_cast<int>(vs.size());
    if (l > 30) throw BadInput("tree too large to enumerate");
    std::vector<ClosedSubset> out;
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < l; ++i)
            if (mask & (1u << i)) s.push_back(vs[static_cast<size_t>(i)]);
        // closure: j in S, i in T, j -> i  =>  i in S
        bool closed = true;
        for (int j : s) {
            for (int i : vs) {
                if (q.arc_count(j, i) == 0) continue;
                if (!std::binary_search(s.begin(), s.end(), i)) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (!closed) continue;
        // phi(S): components of the induced undirected subgraph.
        int comps = 0;
        std::set<int> seen;
        for (int v : s) {
            if (seen.count(v)) continue;
            ++comps;
            std::vector<int> stack{v};
            seen.insert(v);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : s) {
                    if (!seen.count(w) && q.edge(u, w)) {
                        seen.insert(w);
                        stack.push_back(w);
                    }
                }
            }
        }
        out.push_back(ClosedSubset{std::move(s), comps});
    }
    return out;
}

QFPoly tree_qfpoly(const TreeSubset& t, const Quiver& q, std::int64_t d_scalar) {
    if (d_scalar <= 0) throw BadInput("d must be positive");
    const int n = q.vertex_count();
    ZContextPtr ctx = ZContext::make(q.matrix(), std::vector<std::int64_t>(static_cast<size_t>(n), d_scalar));
    TorusElement sum(ctx->form);
    for (const ClosedSubset& s : closed_subsets(t, q)) {
        ExpVec e(static_cast<size_t>(n), 0);
        for (int v : s.vertices) e[static_cast<size_t>(v - 1)] = 1;
        sum.add_term(e, QLaurent::q_power(HalfInt(d_scalar * s.components)));
    }
    return QFPoly::from_torus(std::move(ctx), std::move(sum));
}

GammaData GammaData::make(int k, const TreeSubset& t, const Quiver& q) {
    GammaData g;
    g.k = k;
    for (int v : t.vertices()) {
        if (q.arc_count(v, k) > 0) g.i_in.push_back(v);
        if (q.arc_count(k, v) > 0) g.i_out.push_back(v);
    }
    // Directed reachability inside the induced subquiver on T.
    for (int j : g.i_out) {
        std::set<int> reach{j};
        std::vector<int> stack{j};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : t.vertices()) {
                if (!reach.count(w) && q.arc_count(u, w) > 0) {
                    reach.insert(w);
                    stack.push_back(w);
                }
            }
        }
        for (int i : g.i_in)
            if (reach.count(i)) g.path_pairs.emplace_back(j, i);
    }
    return g;
}

namespace {

bool augment(int u, const std::vector<std::vector<int>>& adj, std::vector<int>& match_l, std::vector<int>& match_r,
             std::vector<bool>& used) {
    for (int v : adj[static_cast<size_t>(u)]) {
        if (used[static_cast<size_t>(v)]) continue;
        used[static_cast<size_t>(v)] = true;
        if (match_r[static_cast<size_t>(v)] < 0 ||
            augment(match_r[static_cast<size_t>(v)], adj, match_l, match_r, used)) {
            match_l[static_cast<size_t>(u)] = v;
            match_r[static_cast<size_t>(v)] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

int gamma_rank(const GammaData& g) {
    const int nl = static_cast<int>(g.i_out.size());
    const int nr = static_cast<int>(g.i_in.size());
    std::vector<std::vector<int>> adj(static_cast<size_t>(nl));
    for (auto [j, i] : g.path_pairs) {
        auto jt = std::find(g.i_out.begin(), g.i_out.end(), j);
        auto it = std::find(g.i_in.begin(), g.i_in.end(), i);
        adj[static_cast<size_t>(jt - g.i_out.begin())].push_back(static_cast<int>(it - g.i_in.begin()));
    }
    std::vector<int> match_l(static_cast<size_t>(nl), -1), match_r(static_cast<size_t>(nr), -1);
    int rank = 0;
    for (int u = 0; u < nl; ++u) {
        std::vector<bool> used(static_cast<size_t>(nr), false);
        if (augment(u, adj, match_l, match_r, used)) ++rank;
    }
    return rank;
}

namespace {

void require_unit_entries(const Quiver& q) {
    if (!q.simple()) throw EntriesOutOfRange("matrix entries must lie in {0, 1, -1}");
}

}  // namespace

GVec tree_gvector(const TreeSubset& t, const Quiver& q) {
    require_unit_entries(q);
    const int n = q.vertex_count();
    GVec g(static_cast<size_t>(n), 0);
    for (int k = 1; k <= n; ++k) {
        GammaData gd = GammaData::make(k, t, q);
        const int rank = gamma_rank(gd);
        const int dim_m = t.contains(k) ? 1 : 0;
        if (dim_m == 1 && rank != 0)
            throw std::logic_error("gamma_k must vanish on tree vertices (a path would close a cycle)");
        g[static_cast<size_t>(k - 1)] = static_cast<std::int64_t>(gd.i_out.size()) - rank - dim_m;
    }
    return g;
}

namespace {

// All triangles {a, b} with edges a-v, b-v, a-b (as neighbor pairs of v).
std::vector<std::pair<int, int>> triangles_at(const Quiver& q, int v) {
    std::vector<int> nbr;
    for (int u = 1; u <= q.vertex_count(); ++u)
        if (u != v && q.edge(u, v)) nbr.push_back(u);
    std::vector<std::pair<int, int>> tri;
    for (size_t a = 0; a < nbr.size(); ++a)
        for (size_t b = a + 1; b < nbr.size(); ++b)
            if (q.edge(nbr[a], nbr[b])) tri.emplace_back(nbr[a], nbr[b]);
    return tri;
}

void check_type_a(const Quiver& q) {
    const int n = q.vertex_count();
    if (n > 20) throw BadInput("vertex count too large for subset enumeration");
    if (!q.simple()) throw NotTypeA("condition (1): multiple edges are present");
    // (1) every induced cycle is an oriented 3-cycle.
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        if (s.size() < 3) continue;
        bool is_cycle = true;
        int edges = 0;
        for (int v : s) {
            int d = 0;
            for (int u : s)
                if (u != v && q.edge(u, v)) ++d;
            if (d != 2) {
                is_cycle = false;
                break;
            }
            edges += d;
        }
        if (!is_cycle || edges != 2 * static_cast<int>(s.size())) continue;
        // 2-regular induced graphs are disjoint unions of cycles; only the
        // connected ones are induced cycles (components recur at smaller masks).
        std::set<int> seen{s[0]};
        std::vector<int> stack{s[0]};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : s)
                if (!seen.count(w) && q.edge(u, w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        if (seen.size() != s.size()) continue;
        if (s.size() != 3) throw NotTypeA("condition (1): an induced cycle of length > 3 exists");
        int a = s[0], b = s[1], c = s[2];
        bool oriented = (q.arc_count(a, b) > 0 && q.arc_count(b, c) > 0 && q.arc_count(c, a) > 0) ||
                        (q.arc_count(a, c) > 0 && q.arc_count(c, b) > 0 && q.arc_count(b, a) > 0);
        if (!oriented) throw NotTypeA("condition (1): an induced 3-cycle is not oriented");
    }
    for (int v = 1; v <= n; ++v) {
        const int deg = q.degree(v);
        if (deg > 4) throw NotTypeA("condition (2): vertex " + std::to_string(v) + " has degree > 4");
        auto tri = triangles_at(q, v);
        if (deg == 4) {
            // The four edges split into two pairs, each pair in a 3-cycle.
            bool ok = false;
            for (const auto& [a, b] : tri)
                for (const auto& [c, d] : tri)
                    if (a != c && a != d && b != c && b != d) ok = true;
            if (!ok) throw NotTypeA("condition (3): degree-4 vertex " + std::to_string(v) + " lacks two disjoint 3-cycles");
        } else if (deg == 3) {
            bool ok = false;
            std::vector<int> nbr;
            for (int u = 1; u <= n; ++u)
                if (u != v && q.edge(u, v)) nbr.push_back(u);
            for (int w : nbr) {
                bool w_in_tri = false;
                for (const auto& [a, b] : tri)
                    if (a == w || b == w) w_in_tri = true;
                bool others_tri = false;
                for (const auto& [a, b] : tri)
                    if (a != w && b != w) others_tri = true;
                if (!w_in_tri && others_tri) ok = true;
            }
            if (!ok) throw NotTypeA("condition (4): degree-3 vertex " + std::to_string(v) + " edges split incorrectly");
        }
    }
}

}  // namespace

std::vector<TreeSubset> typeA_chains(const Quiver& q) {
    check_type_a(q);
    const int n = q.vertex_count();
    std::vector<TreeSubset> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::set<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.insert(i + 1);
        try {
            out.push_back(TreeSubset::chain(s, q));
        } catch (const BadInput&) {
            // not a chain
        }
    }
    return out;
}

GVec typeA_gvector(const TreeSubset& c, const Quiver& q) {
    require_unit_entries(q);
    const int n = q.vertex_count();
    GVec g(static_cast<size_t>(n), 0);
    for (int k = 1; k <= n; ++k) {
        if (c.contains(k)) {
            int out_deg = 0;
            for (int v : c.vertices())
                if (q.arc_count(k, v) > 0) ++out_deg;
            g[static_cast<size_t>(k - 1)] = out_deg - 1;
            continue;
        }
        bool arrow_into_c = false;
        for (int v : c.vertices())
            if (q.arc_count(k, v) > 0) arrow_into_c = true;
        if (!arrow_into_c) continue;
        std::set<int> extended(c.vertices().begin(), c.vertices().end());
        extended.insert(k);
        try {
            TreeSubset::chain(extended, q);
            g[static_cast<size_t>(k - 1)] = 1;
        } catch (const BadInput&) {
            // C + {k} is not a chain: contribution 0
        }
    }
    return g;
}

}  // namespace qca
