#ifndef NDP_REROUTE_HPP
#define NDP_REROUTE_HPP

#include <vector>

#include "ndp/curves.hpp"
#include "ndp/embedding.hpp"

namespace ndp {

/// Pairwise vertex-disjoint (or internally disjoint, by context) simple paths
/// with endpoint roles.
struct PathSet {
    std::vector<std::vector<int>> paths;
    std::vector<int> sources;  // paths[i].front() for each i
    std::vector<int> sinks;    // paths[i].back()

    static PathSet of(std::vector<std::vector<int>> ps) {
        PathSet s;
        for (auto& p : ps) {
            s.sources.push_back(p.front());
            s.sinks.push_back(p.back());
        }
        s.paths = std::move(ps);
        return s;
    }
};

/// True iff path ∩ cycle is a (possibly empty or single-vertex) subpath.
bool monotone_wrt(const std::vector<int>& path, const std::vector<int>& cycle);

/// Reroutes internally disjoint s-t paths so each one crosses C in a single
/// subpath (bump shadows). H is the plane-drawn host graph, C a simple cycle
/// with s strictly inside and t outside, incident on the outer face, and
/// C = min-cycle(H, s); the paths must union with C to give H.
/// Throws PreconditionViolated.
PathSet reroute_monotone_cycle(const PlaneGraph& h, const std::vector<int>& cycle,
                               const std::vector<std::vector<int>>& paths, int s, int t);

/// Reroutes node-disjoint paths leaving a disc so they become monotone with
/// respect to a family of tight concentric cycles around it. The paths run
/// from A ⊆ V(base boundary) to B inside a connected subgraph beyond the last
/// cycle, internally disjoint from both; endpoints are preserved per path.
PathSet reroute_monotone_family(const PlaneGraph& g, const std::vector<char>& base_disc,
                                const std::vector<std::vector<int>>& cycles,
                                const std::vector<Disc>& cycle_discs,
                                const std::vector<std::vector<int>>& paths);

}  // namespace ndp

#endif
