#ifndef NDP_GEN_HPP
#define NDP_GEN_HPP

#include <random>
#include <utility>
#include <vector>

#include "ndp/embedding.hpp"

namespace ndp {

/// Plane-drawn graph: an embedding plus the designated outer face.
struct PlaneGraph {
    Embedding g;
    int outer_face = -1;
};

/// Rows x cols grid; ids row-major, rotations listed E,N,W,S. Outer face is
/// the largest one.
PlaneGraph make_grid(int rows, int cols);

inline int grid_id(int cols, int r, int c) { return r * cols + c; }

struct CylinderGraph {
    Embedding g;
    int cap1_face = -1;  // cuff face touching the sources
    int cap2_face = -1;
    std::vector<int> sources;  // pendant terminals on cuff 1, by demand index
    std::vector<int> sinks;    // pendant terminals on cuff 2, by demand index
};

/// rings x cols cylindrical grid with degree-1 terminals hanging into the
/// cuff faces at the given columns. demand i = (sources[i], sinks[i]).
CylinderGraph make_cylinder_grid(int rings, int cols, const std::vector<int>& source_cols,
                                 const std::vector<int>& sink_cols);

/// Wheel: cycle of rim_size vertices (ids 0..rim_size-1) plus a hub (id
/// rim_size) adjacent to every rim vertex. Outer face is the rim's far side.
PlaneGraph make_wheel(int rim_size);

/// Simple cycle on n vertices; outer face of the designated side.
PlaneGraph make_cycle(int n);

/// Random planar graph built from a triangle by seeded face splits and edge
/// subdivisions; the outer face is preserved and grows only by subdivision.
PlaneGraph make_random_planar(int target_vertices, std::mt19937& rng);

/// Distinct vertices on the outer face walk, in walk order.
std::vector<int> outer_walk_vertices(const PlaneGraph& pg);

}  // namespace ndp

#endif
