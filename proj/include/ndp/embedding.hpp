#ifndef NDP_EMBEDDING_HPP
#define NDP_EMBEDDING_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ndp/errors.hpp"

namespace ndp {

/// A dart is a directed edge, addressed as (origin vertex, index into its rotation).
struct Dart {
    int v = -1;
    int slot = -1;

    bool operator==(const Dart& o) const { return v == o.v && slot == o.slot; }
};

/// Combinatorial embedding of a simple planar graph on the sphere: a rotation
/// system (cyclic neighbor order per vertex) with faces derived by the fixed
/// tracing rule: the successor of dart u->v is v->w, where w immediately
/// follows u in the rotation of v. The face of a dart is the face traced
/// through it; all disc orientations downstream derive from this convention.
///
/// Immutable after construction.
class Embedding {
public:
    Embedding() = default;

    /// Validating constructor: checks symmetry, no loops/parallels, and
    /// Euler's formula per connected component.
    /// Throws MalformedRotation / NonPlanarRotation.
    static Embedding from_rotations(int vertex_count, std::vector<std::vector<int>> rotations);

    /// Same id space, listed vertices deleted (their rotations emptied and all
    /// references dropped). No planarity re-validation: vertex deletion
    /// preserves it.
    Embedding remove_vertices(const std::vector<char>& removed) const;

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int face_count() const { return static_cast<int>(face_walks_.size()); }

    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    int neighbor(int v, int slot) const { return rot_[v][slot]; }

    /// Index of v in rot[u], or -1.
    int slot_of(int u, int v) const {
        auto it = slot_map_.find(key(u, v));
        return it == slot_map_.end() ? -1 : it->second;
    }
    bool has_edge(int u, int v) const { return slot_of(u, v) >= 0; }

    Dart dart(int u, int v) const {
        int s = slot_of(u, v);
        require(s >= 0, ErrorCode::BadInput, "no such dart");
        return Dart{u, s};
    }
    int dart_to(Dart d) const { return rot_[d.v][d.slot]; }

    /// Successor dart in its face walk.
    Dart next_in_face(Dart d) const {
        int v = rot_[d.v][d.slot];
        int j = twin_slot_[d.v][d.slot];
        return Dart{v, (j + 1) % degree(v)};
    }

    int face_of(Dart d) const { return dart_face_[d.v][d.slot]; }
    int face_of(int u, int v) const { return face_of(dart(u, v)); }

    const std::vector<std::vector<Dart>>& face_walks() const { return face_walks_; }
    const std::vector<Dart>& face_walk(int f) const { return face_walks_[f]; }

    /// Boundary walk of f as a vertex sequence (one entry per dart origin).
    std::vector<int> face_walk_vertices(int f) const;
    /// Distinct vertices on the boundary of f.
    std::vector<int> face_vertex_set(int f) const;
    bool face_has_vertex(int f, int v) const;

    /// Faces incident to v, one entry per rotation slot (face of dart (v, slot)).
    std::vector<int> faces_at(int v) const;

    int component_of(int v) const { return comp_[v]; }
    int component_count() const { return comp_count_; }

    bool alive(int v) const { return alive_[v]; }

private:
    static int64_t key(int u, int v) { return static_cast<int64_t>(u) << 32 | static_cast<uint32_t>(v); }

    void derive(bool validate_euler);

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> rot_;
    std::vector<std::vector<int>> twin_slot_;  // twin_slot_[u][i] = slot of u in rot[rot[u][i]]
    std::vector<std::vector<int>> dart_face_;
    std::vector<std::vector<Dart>> face_walks_;
    std::unordered_map<int64_t, int> slot_map_;
    std::vector<int> comp_;
    int comp_count_ = 0;
    std::vector<char> alive_;
};

/// Alternating vertex/face sequence crossing the drawing only at vertices.
/// Open curves start and end at vertices: faces[i] joins verts[i] to
/// verts[i+1]. Closed curves have |faces| == |verts|, faces.back() joining
/// verts.back() to verts.front(). Length = number of vertex elements.
struct NormalCurve {
    std::vector<int> verts;
    std::vector<int> faces;
    bool closed = false;

    int length() const { return static_cast<int>(verts.size()); }
};

/// Checks alternating incidence and vertex-element distinctness.
void verify_normal_curve(const Embedding& g, const NormalCurve& c);

}  // namespace ndp

#endif
