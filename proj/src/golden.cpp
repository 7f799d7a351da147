#include "qca/golden.hpp"

namespace qca::golden {

const IntMat& a2_matrix() {
    static const IntMat b = {{0, 1}, {-1, 0}};
    return b;
}

const std::vector<A2Row>& a2_rows() {
    static const std::vector<A2Row> rows = {
        {{},
         {{0, 1}, {-1, 0}, {1, 0}, {0, 1}},
         {1, 0},
         {0, 1},
         {{{0, 0}, 0}},
         {{{0, 0}, 0}}},
        {{2},
         {{0, -1}, {1, 0}, {1, 0}, {0, -1}},
         {1, 0},
         {0, -1},
         {{{0, 0}, 0}},
         {{{0, 1}, 2}, {{0, 0}, 0}}},
        {{2, 1},
         {{0, 1}, {-1, 0}, {-1, 0}, {0, -1}},
         {-1, 0},
         {0, -1},
         {{{1, 1}, 2}, {{1, 0}, 2}, {{0, 0}, 0}},
         {{{0, 1}, 2}, {{0, 0}, 0}}},
        {{2, 1, 2},
         {{0, -1}, {1, 0}, {-1, 0}, {-1, 1}},
         {-1, 0},
         {-1, 1},
         {{{1, 1}, 2}, {{1, 0}, 2}, {{0, 0}, 0}},
         {{{1, 0}, 2}, {{0, 0}, 0}}},
        {{2, 1, 2, 1},
         {{0, 1}, {-1, 0}, {1, -1}, {1, 0}},
         {0, 1},
         {-1, 1},
         {{{0, 0}, 0}},
         {{{1, 0}, 2}, {{0, 0}, 0}}},
        {{2, 1, 2, 1, 2},
         {{0, -1}, {1, 0}, {0, 1}, {1, 0}},
         {0, 1},
         {1, 0},
         {{{0, 0}, 0}},
         {{{0, 0}, 0}}},
    };
    return rows;
}

const IntMat& a4_matrix() {
    static const IntMat b = {{0, 1, -1, 0}, {-1, 0, 1, 0}, {1, -1, 0, -1}, {0, 0, 1, 0}};
    return b;
}

const std::vector<A4Row>& a4_rows() {
    static const std::vector<A4Row> rows = {
        {{1}, {1, 0, 0, 0}, {-1, 1, 0, 0}, {{{1, 0, 0, 0}, 2}, {{0, 0, 0, 0}, 0}}},
        {{2}, {0, 1, 0, 0}, {0, -1, 1, 0}, {{{0, 1, 0, 0}, 2}, {{0, 0, 0, 0}, 0}}},
        {{3}, {0, 0, 1, 0}, {1, 0, -1, 0}, {{{0, 0, 1, 0}, 2}, {{0, 0, 0, 0}, 0}}},
        {{4}, {0, 0, 0, 1}, {0, 0, 1, -1}, {{{0, 0, 0, 1}, 2}, {{0, 0, 0, 0}, 0}}},
        {{1, 2},
         {1, 1, 0, 0},
         {-1, 0, 0, 0},
         {{{1, 1, 0, 0}, 2}, {{1, 0, 0, 0}, 2}, {{0, 0, 0, 0}, 0}}},
        {{1, 3},
         {1, 0, 1, 0},
         {0, 0, -1, 0},
         {{{1, 0, 1, 0}, 2}, {{0, 0, 1, 0}, 2}, {{0, 0, 0, 0}, 0}}},
        {{2, 3},
         {0, 1, 1, 0},
         {0, -1, 0, 0},
         {{{0, 1, 1, 0}, 2}, {{0, 1, 0, 0}, 2}, {{0, 0, 0, 0}, 0}}},
        {{3, 4},
         {0, 0, 1, 1},
         {1, 0, 0, -1},
         {{{0, 0, 1, 1}, 2}, {{0, 0, 0, 1}, 2}, {{0, 0, 0, 0}, 0}}},
        {{1, 3, 4},
         {1, 0, 1, 1},
         {0, 0, 0, -1},
         {{{1, 0, 1, 1}, 2}, {{0, 0, 1, 1}, 2}, {{0, 0, 0, 1}, 2}, {{0, 0, 0, 0}, 0}}},
        {{2, 3, 4},
         {0, 1, 1, 1},
         {0, -1, 1, -1},
         {{{0, 1, 1, 1}, 2}, {{0, 1, 0, 1}, 4}, {{0, 1, 0, 0}, 2}, {{0, 0, 0, 1}, 2}, {{0, 0, 0, 0}, 0}}},
    };
    return rows;
}

}  // namespace qca::golden
