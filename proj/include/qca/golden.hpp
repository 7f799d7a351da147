#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qca/classical.hpp"

namespace qca::golden {

/// One reference term: exponent vector and the doubled q-exponent of its
/// coefficient (every reference coefficient is a single power of q).
using RefTerm = std::pair<ExpVec, std::int64_t>;
using RefPoly = std::vector<RefTerm>;

/// Known values for the rank-2 case B0 = [[0,1],[-1,0]], D = 2I, along the
/// alternating word 2,1,2,1,2; row r corresponds to the length-r prefix.
struct A2Row {
    MutationWord word;
    IntMat btilde;  // 2n x n principal family at this vertex
    GVec g1, g2;
    RefPoly f1, f2;
};

const std::vector<A2Row>& a2_rows();
const IntMat& a2_matrix();

/// Known values for a rank-4 case with D = 2I: one row per chain, each chain
/// listed in path order (which is also its mutation word).
struct A4Row {
    std::vector<int> chain;
    DVec denominator;
    GVec gvec;
    RefPoly fpoly;
};

const std::vector<A4Row>& a4_rows();
const IntMat& a4_matrix();

}  // namespace qca::golden
