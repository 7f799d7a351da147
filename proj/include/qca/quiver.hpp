#pragma once

#include <set>
#include <utility>
#include <vector>

#include "qca/qfpoly.hpp"

namespace qca {

/// Quiver of a skew-symmetric matrix: |b_ij| arrows i -> j iff b_ij < 0.
/// No loops, no 2-cycles.
class Quiver {
public:
    Quiver(int n, std::vector<std::pair<int, int>> arcs);

    static Quiver from_matrix(const IntMat& b);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

    /// Number of arrows i -> j (1-based).
    int arc_count(int i, int j) const;
    bool edge(int i, int j) const { return arc_count(i, j) + arc_count(j, i) > 0; }
    int degree(int v) const;
    bool simple() const;  // no multiple arrows

    /// Skew-symmetric matrix this quiver encodes.
    IntMat matrix() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;  // sorted, with repeats for multiplicity
};

/// Vertex subset inducing a tree, listed so every prefix induces a tree in
/// which the last listed vertex is a leaf.
class TreeSubset {
public:
    /// Validates the given order.
    static TreeSubset make(std::vector<int> vertices, const Quiver& q);

    /// Finds an admissible order for the set (any tree works).
    static TreeSubset ordered(const std::set<int>& vertices, const Quiver& q);

    /// Admissible order that is additionally a path traversal; requires the
    /// induced subquiver to be a chain.
    static TreeSubset chain(const std::set<int>& vertices, const Quiver& q);

    const std::vector<int>& vertices() const { return vertices_; }
    bool contains(int v) const;
    /// The mutation word reaching the associated cluster variable.
    MutationWord word() const { return MutationWord(vertices_.begin(), vertices_.end()); }

private:
    explicit TreeSubset(std::vector<int> vertices) : vertices_(std::move(vertices)) {}
    std::vector<int> vertices_;
};

struct ClosedSubset {
    std::vector<int> vertices;  // ascending
    int components = 0;         // phi(S) of the induced subquiver
};

/// All S in T closed under "arrows leaving S into T stay in S", with their
/// component counts.
std::vector<ClosedSubset> closed_subsets(const TreeSubset& t, const Quiver& q);

/// F_T = sum over closed S of q^{(d/2) phi(S)} Z^{e_S}; needs D = d*I.
QFPoly tree_qfpoly(const TreeSubset& t, const Quiver& q, std::int64_t d_scalar);

/// In/out neighborhoods of k inside T and the directed-path pairs used by the
/// rank computation.
struct GammaData {
    int k = 0;
    std::vector<int> i_in;   // i in T with i -> k
    std::vector<int> i_out;  // j in T with k -> j
    std::vector<std::pair<int, int>> path_pairs;  // (j, i): directed path j ~> i inside T

    static GammaData make(int k, const TreeSubset& t, const Quiver& q);
};

/// Maximum number of disjoint out->in path pairs (a bipartite matching).
int gamma_rank(const GammaData& g);

/// g_k = |I_out(k)| - rank(gamma_k) - dim M(k); requires entries in {0,1,-1}.
GVec tree_gvector(const TreeSubset& t, const Quiver& q);

/// All chain subsets of a type-A quiver in path order; throws NotTypeA with
/// the violated recognition condition.
std::vector<TreeSubset> typeA_chains(const Quiver& q);

/// Chain-case g-vector formula.
GVec typeA_gvector(const TreeSubset& c, const Quiver& q);

}  // namespace qca
