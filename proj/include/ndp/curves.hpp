#ifndef NDP_CURVES_HPP
#define NDP_CURVES_HPP

#include <optional>
#include <vector>

#include "ndp/embedding.hpp"

namespace ndp {

/// Side classification of faces/vertices relative to a simple cycle.
/// Faces get 0 or 1; -2 means the face is in another component (its nesting
/// is not determined by the rotation system). Vertices on the cycle get -1.
struct CycleSides {
    std::vector<signed char> face_side;
    std::vector<signed char> vertex_side;
};

CycleSides cycle_sides(const Embedding& g, const std::vector<int>& cycle);

/// Combinatorial disc with a designated boundary. For cycle-bounded discs the
/// boundary is the cycle; for normal-curve-bounded discs the boundary is the
/// curve's vertex set. inside holds every vertex of the disc including the
/// boundary.
struct Disc {
    std::vector<int> boundary;      // cycle order when it comes from a cycle
    std::vector<char> inside;       // per-vertex membership mask (V(D))
    std::vector<char> inside_face;  // faces strictly inside (empty for curve-bounded discs)

    bool contains(int v) const { return inside[v]; }
    int size() const {
        int c = 0;
        for (char b : inside) c += b;
        return c;
    }
};

/// Disc of a simple cycle: the side not containing outer_face.
Disc disc_of_cycle(const Embedding& g, const std::vector<int>& cycle, int outer_face);

/// Shortest normal curve between u and v, avoiding the forbidden elements at
/// interior positions. Cost is the number of vertex elements; ties broken by
/// the lexicographically smallest element-id sequence (faces numbered after
/// vertices). Throws Unreachable.
NormalCurve shortest_normal_curve(const Embedding& g, int u, int v,
                                  const std::vector<char>& forbidden_vertices = {},
                                  const std::vector<char>& forbidden_faces = {});

/// d_GNC(u,v) = shortest normal curve length minus one.
int d_gnc(const Embedding& g, int u, int v);

/// Vertex-count distances from a source set to every vertex, d[v] = shortest
/// normal curve length from any source to v, minus one (so d=0 on sources).
/// Unreachable vertices get -1.
std::vector<int> d_gnc_from_set(const Embedding& g, const std::vector<int>& sources);

/// Result of growing tight concentric cycles; failed_depth is set when the
/// contraction at that step leaves no enclosing cycle (the cycles built so
/// far are the maximal prefix).
struct TightCycles {
    std::vector<std::vector<int>> cycles;
    std::vector<Disc> discs;  // disc of each cycle, same indexing
    std::optional<int> failed_depth;
};

/// min-cycle(g, v) in the plane drawing with the given outer face: the unique
/// inclusion-minimal cycle whose disc strictly contains v.
/// Throws NoEnclosingCycle.
std::vector<int> min_cycle(const Embedding& g, int v, int outer_face);

/// min-cycle around a vertex set: equivalent to contracting the (connected,
/// disc-shaped) set into a super-node and taking its min-cycle. Returns the
/// unique inclusion-minimal cycle enclosing every vertex of the set.
std::vector<int> min_cycle_around_set(const Embedding& g, const std::vector<char>& blob, int outer_face);

/// min-cycle around a face: contract the face to a point and enclose it.
std::vector<int> min_cycle_around_face(const Embedding& g, int hole_face, int outer_face);

/// Z_1..Z_r tight concentric cycles around a base disc (which may be a single
/// vertex, a cycle disc, or a curve-bounded disc given by its vertex mask).
TightCycles tight_concentric_cycles(const Embedding& g, const std::vector<char>& base_disc, int outer_face,
                                    int r);

/// Variant anchored on a face instead of a vertex blob (used for cylinder
/// cuffs, whose cap face plays the role of the base disc).
TightCycles tight_concentric_cycles_around_face(const Embedding& g, int hole_face, int outer_face, int r);

}  // namespace ndp

#endif
