#include "ndp/embedding.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace ndp {

Embedding Embedding::from_rotations(int vertex_count, std::vector<std::vector<int>> rotations) {
    require(vertex_count >= 0, ErrorCode::BadInput, "negative vertex count");
    require(static_cast<int>(rotations.size()) == vertex_count, ErrorCode::MalformedRotation,
            "rotation list size does not match vertex count");

    Embedding g;
    g.n_ = vertex_count;
    g.rot_ = std::move(rotations);
    g.alive_.assign(vertex_count, 1);

    for (int u = 0; u < vertex_count; ++u) {
        std::unordered_set<int> seen;
        for (int v : g.rot_[u]) {
            require(v >= 0 && v < vertex_count, ErrorCode::MalformedRotation, "neighbor id out of range");
            require(v != u, ErrorCode::MalformedRotation, "self-loop");
            require(seen.insert(v).second, ErrorCode::MalformedRotation, "parallel edge in rotation");
        }
    }
    g.derive(true);
    return g;
}

Embedding Embedding::remove_vertices(const std::vector<char>& removed) const {
    require(static_cast<int>(removed.size()) == n_, ErrorCode::BadInput, "removed mask size");
    Embedding g;
    g.n_ = n_;
    g.rot_.resize(n_);
    g.alive_.resize(n_);
    for (int u = 0; u < n_; ++u) {
        g.alive_[u] = alive_[u] && !removed[u];
        if (!g.alive_[u]) continue;
        for (int v : rot_[u])
            if (!removed[v] && alive_[v]) g.rot_[u].push_back(v);
    }
    g.derive(false);
    return g;
}

void Embedding::derive(bool validate_euler) {
    twin_slot_.assign(n_, {});
    dart_face_.assign(n_, {});
    slot_map_.clear();
    int dart_count = 0;
    for (int u = 0; u < n_; ++u) {
        for (int i = 0; i < static_cast<int>(rot_[u].size()); ++i) slot_map_[key(u, rot_[u][i])] = i;
        dart_count += static_cast<int>(rot_[u].size());
    }
    require(dart_count % 2 == 0, ErrorCode::MalformedRotation, "odd dart count");
    m_ = dart_count / 2;

    for (int u = 0; u < n_; ++u) {
        twin_slot_[u].resize(rot_[u].size());
        dart_face_[u].assign(rot_[u].size(), -1);
        for (int i = 0; i < static_cast<int>(rot_[u].size()); ++i) {
            int v = rot_[u][i];
            int j = slot_of(v, u);
            require(j >= 0, ErrorCode::MalformedRotation, "asymmetric adjacency");
            twin_slot_[u][i] = j;
        }
    }

    // Face tracing: every dart is on exactly one face walk.
    face_walks_.clear();
    for (int u = 0; u < n_; ++u) {
        for (int i = 0; i < static_cast<int>(rot_[u].size()); ++i) {
            if (dart_face_[u][i] >= 0) continue;
            int f = static_cast<int>(face_walks_.size());
            face_walks_.emplace_back();
            Dart d{u, i};
            while (dart_face_[d.v][d.slot] < 0) {
                dart_face_[d.v][d.slot] = f;
                face_walks_[f].push_back(d);
                d = next_in_face(d);
            }
            require(d == Dart{u, i}, ErrorCode::Internal, "face walk did not close");
        }
    }

    // Connected components over alive vertices.
    comp_.assign(n_, -1);
    comp_count_ = 0;
    for (int s = 0; s < n_; ++s) {
        if (!alive_[s] || comp_[s] >= 0) continue;
        int c = comp_count_++;
        std::queue<int> q;
        q.push(s);
        comp_[s] = c;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : rot_[u])
                if (comp_[v] < 0) {
                    comp_[v] = c;
                    q.push(v);
                }
        }
    }

    if (validate_euler) {
        // V - E + F = 2 per component; an edgeless component has one face by
        // convention (tracing yields none).
        std::vector<int> vc(comp_count_, 0), ec(comp_count_, 0), fc(comp_count_, 0);
        for (int u = 0; u < n_; ++u) {
            vc[comp_[u]]++;
            ec[comp_[u]] += static_cast<int>(rot_[u].size());
        }
        for (const auto& walk : face_walks_) fc[comp_[walk.front().v]]++;
        for (int c = 0; c < comp_count_; ++c) {
            int e = ec[c] / 2;
            int f = e == 0 ? 1 : fc[c];
            require(vc[c] - e + f == 2, ErrorCode::NonPlanarRotation,
                    "Euler check failed: V-E+F != 2 for a component");
        }
    }
}

std::vector<int> Embedding::face_walk_vertices(int f) const {
    std::vector<int> out;
    out.reserve(face_walks_[f].size());
    for (const Dart& d : face_walks_[f]) out.push_back(d.v);
    return out;
}

std::vector<int> Embedding::face_vertex_set(int f) const {
    std::vector<int> out = face_walk_vertices(f);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Embedding::face_has_vertex(int f, int v) const {
    for (const Dart& d : face_walks_[f])
        if (d.v == v) return true;
    return false;
}

std::vector<int> Embedding::faces_at(int v) const {
    std::vector<int> out;
    out.reserve(rot_[v].size());
    for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) out.push_back(dart_face_[v][i]);
    return out;
}

void verify_normal_curve(const Embedding& g, const NormalCurve& c) {
    require(!c.verts.empty(), ErrorCode::BadInput, "empty curve");
    size_t want_faces = c.closed ? c.verts.size() : c.verts.size() - 1;
    if (c.closed && c.verts.size() == 1) want_faces = 1;
    require(c.faces.size() == want_faces, ErrorCode::BadInput, "curve element counts");
    std::unordered_set<int> seen(c.verts.begin(), c.verts.end());
    require(seen.size() == c.verts.size(), ErrorCode::BadInput, "repeated vertex element on simple curve");
    for (size_t i = 0; i < c.faces.size(); ++i) {
        int a = c.verts[i];
        int b = c.verts[(i + 1) % c.verts.size()];
        require(g.face_has_vertex(c.faces[i], a) && g.face_has_vertex(c.faces[i], b), ErrorCode::BadInput,
                "curve face element not incident to its vertex elements");
    }
}

}  // namespace ndp
