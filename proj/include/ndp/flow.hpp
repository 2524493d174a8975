#ifndef NDP_FLOW_HPP
#define NDP_FLOW_HPP

#include <vector>

#include "ndp/curves.hpp"
#include "ndp/embedding.hpp"

namespace ndp {

struct MengerResult {
    std::vector<std::vector<int>> paths;  // vertex-disjoint A-B paths (vertex sequences)
    std::vector<int> cut;                 // minimum vertex cut, |cut| == |paths|
};

/// Maximum set of vertex-disjoint A-B paths plus a minimum vertex cut of the
/// same size (node-split max-flow). With internal_only the endpoints are
/// uncapacitated, giving internally disjoint paths (endpoints shareable).
MengerResult menger_vertex_disjoint(const std::vector<std::vector<int>>& adj, const std::vector<int>& A,
                                    const std::vector<int>& B, bool internal_only = false);

MengerResult menger_vertex_disjoint(const Embedding& g, const std::vector<int>& A, const std::vector<int>& B,
                                    bool internal_only = false);

/// Just the connectivity number (max vertex-disjoint path count).
int menger_count(const Embedding& g, const std::vector<int>& A, const std::vector<int>& B,
                 bool internal_only = false);

/// Minimum separating closed normal curve between s and t on the sphere,
/// realized from a maximum set of internally disjoint s-t paths and a minimum
/// vertex cut: length equals the connectivity of the pair, s and t stay off
/// the curve, and the vertex sets on either side induce connected subgraphs
/// (together with the curve vertices).
struct SeparatingCurve {
    NormalCurve curve;            // closed, alternating cut vertices and faces
    std::vector<char> side_s;     // vertices strictly on s's side
    std::vector<char> side_t;     // vertices strictly on t's side
};

SeparatingCurve min_separating_normal_curve(const Embedding& g, int s, int t);

}  // namespace ndp

#endif
