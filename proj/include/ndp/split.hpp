#ifndef NDP_SPLIT_HPP
#define NDP_SPLIT_HPP

#include <utility>
#include <vector>

#include "ndp/errors.hpp"

namespace ndp {

/// Partition of a directed forest (parent[v] = -1 on roots, edges toward the
/// root) into q <= ceil(log2 n) classes, each inducing disjoint directed
/// paths; comparable vertices within a class share a path.
/// Throws NotAForest.
std::vector<std::vector<int>> decompose_forest(const std::vector<int>& parent);

/// Witness that a collection of demand pairs is r-split: sub-parts plus 2r
/// disjoint segments of the circle in circular order, sub-part i using
/// segments 2i and 2i+1. Segments are half-open position ranges [start,
/// start+len) on the circle of terminal positions, wrapping allowed; together
/// they partition the circle.
struct SplitWitness {
    struct Segment {
        int start = 0, len = 0;
    };
    std::vector<std::vector<std::pair<int, int>>> parts;  // demand pairs per sub-part
    std::vector<Segment> segments;                        // 2 * parts.size(), circular order
};

/// One class of the partition: an r-split collection with its witness.
struct SplitClass {
    std::vector<std::pair<int, int>> pairs;
    SplitWitness witness;
};

/// Partitions demand pairs whose terminals lie on the circle (given as the
/// terminal ids in circular order, each terminal in exactly one pair) into at
/// most 4*ceil(log2 kappa) classes, each r-split with a verified witness.
std::vector<SplitClass> r_split_partition(const std::vector<int>& circle,
                                          const std::vector<std::pair<int, int>>& demands);

/// Checks a witness: sub-parts partition the class, segments are disjoint, in
/// circular order, cover the circle, and every pair straddles its two
/// segments.
bool verify_split_witness(int circle_size, const std::vector<int>& circle_pos_of_terminal,
                          const SplitClass& cls);

/// Crossing predicate for pairs with all four terminals on a disc boundary:
/// true iff they share a terminal or interleave circularly. Arguments are
/// positions on the boundary circle.
bool crosses_on_disc(std::pair<int, int> p1, std::pair<int, int> p2);

}  // namespace ndp

#endif
