#include "ndp/curves.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace ndp {

namespace {

int64_t ekey(int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<int64_t>(u) << 32 | static_cast<uint32_t>(v);
}

// Decomposes a closed walk into vertex-simple cycles (stack method). Tree
// excursions hanging into a face pop out as short echoes and are dropped.
std::vector<std::vector<int>> walk_cycles(const std::vector<int>& walk) {
    std::vector<int> stack;
    std::unordered_map<int, int> pos;
    std::vector<std::vector<int>> out;
    for (int w : walk) {
        auto it = pos.find(w);
        if (it != pos.end()) {
            int p = it->second;
            std::vector<int> cyc(stack.begin() + p, stack.end());
            for (size_t i = p + 1; i < stack.size(); ++i) pos.erase(stack[i]);
            stack.resize(p + 1);
            if (cyc.size() >= 3) out.push_back(std::move(cyc));
        } else {
            pos[w] = static_cast<int>(stack.size());
            stack.push_back(w);
        }
    }
    if (stack.size() >= 3) out.push_back(std::move(stack));
    return out;
}

std::vector<int> canonical_cycle(std::vector<int> c) {
    auto mn = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), mn, c.end());
    if (c.size() >= 3 && c[1] > c.back()) {
        std::reverse(c.begin() + 1, c.end());
    }
    return c;
}

}  // namespace

CycleSides cycle_sides(const Embedding& g, const std::vector<int>& cycle) {
    require(cycle.size() >= 3, ErrorCode::BadInput, "cycle too short");
    const int L = static_cast<int>(cycle.size());
    std::unordered_set<int64_t> cyc_edge;
    for (int i = 0; i < L; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % L];
        require(g.has_edge(a, b), ErrorCode::BadInput, "cycle uses a non-edge");
        cyc_edge.insert(ekey(a, b));
    }

    CycleSides s;
    s.face_side.assign(g.face_count(), -2);
    s.vertex_side.assign(g.vertex_count(), -2);

    std::deque<int> q;
    auto seed = [&](int f, signed char side) {
        require(s.face_side[f] == -2 || s.face_side[f] == side, ErrorCode::Internal,
                "inconsistent cycle side seeding");
        if (s.face_side[f] == -2) {
            s.face_side[f] = side;
            q.push_back(f);
        }
    };
    for (int i = 0; i < L; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % L];
        seed(g.face_of(a, b), 0);
        seed(g.face_of(b, a), 1);
    }
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (const Dart& d : g.face_walk(f)) {
            int u = d.v, v = g.dart_to(d);
            if (cyc_edge.count(ekey(u, v))) continue;
            int f2 = g.face_of(v, u);
            require(s.face_side[f2] == -2 || s.face_side[f2] == s.face_side[f], ErrorCode::Internal,
                    "cycle does not separate its component");
            if (s.face_side[f2] == -2) {
                s.face_side[f2] = s.face_side[f];
                q.push_back(f2);
            }
        }
    }

    for (int c : cycle) s.vertex_side[c] = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s.vertex_side[v] == -1 || g.degree(v) == 0) continue;
        signed char side = -2;
        for (int f : g.faces_at(v)) {
            if (s.face_side[f] == -2) continue;
            require(side == -2 || side == s.face_side[f], ErrorCode::Internal,
                    "off-cycle vertex touches both sides");
            side = s.face_side[f];
        }
        s.vertex_side[v] = side;
    }
    return s;
}

Disc disc_of_cycle(const Embedding& g, const std::vector<int>& cycle, int outer_face) {
    CycleSides s = cycle_sides(g, cycle);
    require(s.face_side[outer_face] == 0 || s.face_side[outer_face] == 1, ErrorCode::BadInput,
            "outer face not separated by the cycle (different component?)");
    signed char inner = 1 - s.face_side[outer_face];
    Disc d;
    d.boundary = cycle;
    d.inside.assign(g.vertex_count(), 0);
    d.inside_face.assign(g.face_count(), 0);
    for (int v : cycle) d.inside[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (s.vertex_side[v] == inner) d.inside[v] = 1;
    for (int f = 0; f < g.face_count(); ++f)
        if (s.face_side[f] == inner) d.inside_face[f] = 1;
    return d;
}

namespace {

// 0-1 BFS over the vertex/face incidence structure; entering a vertex node
// costs 1, a face node 0. Node ids: vertices then faces.
struct RadialBfs {
    const Embedding& g;
    const std::vector<char>& fv;
    const std::vector<char>& ff;
    std::vector<int> dist;

    RadialBfs(const Embedding& g_, const std::vector<char>& forb_v, const std::vector<char>& forb_f)
        : g(g_), fv(forb_v), ff(forb_f), dist(g_.vertex_count() + g_.face_count(), -1) {}

    bool vnode(int x) const { return x < g.vertex_count(); }
    int cost(int x) const { return vnode(x) ? 1 : 0; }
    bool forbidden(int x) const {
        if (vnode(x)) return !fv.empty() && fv[x];
        return !ff.empty() && ff[x - g.vertex_count()];
    }

    template <typename F>
    void neighbors(int x, F&& fn) const {
        if (vnode(x)) {
            int prev = -1;
            for (int f : g.faces_at(x)) {
                if (f != prev) fn(g.vertex_count() + f);
                prev = f;
            }
        } else {
            for (const Dart& d : g.face_walk(x - g.vertex_count())) fn(d.v);
        }
    }

    // allowed_at_end: endpoints exempt from the forbidden masks.
    void run(const std::vector<int>& sources, const std::vector<int>& source_cost,
             const std::vector<char>* exempt = nullptr) {
        std::deque<int> q;
        for (size_t i = 0; i < sources.size(); ++i) {
            int s = sources[i];
            if (dist[s] >= 0 && dist[s] <= source_cost[i]) continue;
            dist[s] = source_cost[i];
            q.push_front(s);
        }
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            neighbors(x, [&](int y) {
                if (forbidden(y) && !(exempt && (*exempt)[y])) return;
                int nd = dist[x] + cost(y);
                if (dist[y] < 0 || nd < dist[y]) {
                    dist[y] = nd;
                    if (cost(y) == 0)
                        q.push_front(y);
                    else
                        q.push_back(y);
                }
            });
        }
    }
};

}  // namespace

NormalCurve shortest_normal_curve(const Embedding& g, int u, int v, const std::vector<char>& forbidden_vertices,
                                  const std::vector<char>& forbidden_faces) {
    require(u >= 0 && u < g.vertex_count() && v >= 0 && v < g.vertex_count(), ErrorCode::BadInput,
            "endpoint out of range");
    require(forbidden_vertices.empty() || (!forbidden_vertices[u] && !forbidden_vertices[v]),
            ErrorCode::BadInput, "endpoint is forbidden");
    NormalCurve curve;
    if (u == v) {
        curve.verts = {u};
        return curve;
    }
    std::vector<char> exempt(g.vertex_count() + g.face_count(), 0);
    exempt[u] = exempt[v] = 1;

    RadialBfs from_u(g, forbidden_vertices, forbidden_faces);
    from_u.run({u}, {1}, &exempt);
    RadialBfs from_v(g, forbidden_vertices, forbidden_faces);
    from_v.run({v}, {1}, &exempt);
    require(from_u.dist[v] >= 0, ErrorCode::Unreachable, "no normal curve between endpoints");
    const int total = from_u.dist[v];

    // Greedy lexicographic reconstruction over element ids (faces after
    // vertices), among minimum-cost curves.
    std::vector<int> path{u};
    int cur = u;
    while (cur != v) {
        int best = -1;
        from_u.neighbors(cur, [&](int y) {
            if (from_u.forbidden(y) && !exempt[y]) return;
            if (from_u.dist[y] != from_u.dist[cur] + from_u.cost(y)) return;
            if (from_v.dist[y] < 0) return;
            if (from_u.dist[y] + from_v.dist[y] - from_u.cost(y) != total) return;
            if (best < 0 || y < best) best = y;
        });
        require(best >= 0, ErrorCode::Internal, "lexicographic walk got stuck");
        path.push_back(best);
        cur = best;
    }
    for (size_t i = 0; i < path.size(); ++i) {
        if (i % 2 == 0)
            curve.verts.push_back(path[i]);
        else
            curve.faces.push_back(path[i] - g.vertex_count());
    }
    require(curve.verts.size() == curve.faces.size() + 1, ErrorCode::Internal, "curve does not alternate");
    return curve;
}

int d_gnc(const Embedding& g, int u, int v) { return shortest_normal_curve(g, u, v).length() - 1; }

std::vector<int> d_gnc_from_set(const Embedding& g, const std::vector<int>& sources) {
    RadialBfs bfs(g, {}, {});
    std::vector<int> cost(sources.size(), 0);
    bfs.run(sources, cost);
    std::vector<int> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out[v] = bfs.dist[v];
    return out;
}

namespace {

std::vector<std::vector<int>> region_boundary_cycles(const Embedding& g, const Embedding& g2,
                                                     const std::vector<char>& hole_faces_of_g) {
    // A face of g2 is part of the merged region iff one of its darts bounded,
    // in g, a face incident to the deleted set.
    std::vector<std::vector<int>> cands;
    std::unordered_set<std::string> seen;
    for (int f2 = 0; f2 < g2.face_count(); ++f2) {
        bool region = false;
        for (const Dart& d : g2.face_walk(f2)) {
            int gf = g.face_of(d.v, g2.dart_to(d));
            if (hole_faces_of_g[gf]) {
                region = true;
                break;
            }
        }
        if (!region) continue;
        for (auto& cyc : walk_cycles(g2.face_walk_vertices(f2))) {
            auto canon = canonical_cycle(cyc);
            std::string k;
            for (int x : canon) k += std::to_string(x) + ",";
            if (seen.insert(k).second) cands.push_back(canon);
        }
    }
    return cands;
}

std::vector<int> pick_enclosing(const Embedding& g, const std::vector<std::vector<int>>& cands,
                                const std::vector<int>& must_enclose_vertices, int must_enclose_face,
                                int outer_face) {
    std::vector<int> best;
    Disc best_disc;
    std::vector<std::pair<std::vector<int>, Disc>> enclosing;
    for (const auto& c : cands) {
        CycleSides s = cycle_sides(g, c);
        if (s.face_side[outer_face] < 0) continue;
        signed char inner = 1 - s.face_side[outer_face];
        bool ok = true;
        for (int v : must_enclose_vertices)
            if (s.vertex_side[v] != inner) {
                ok = false;
                break;
            }
        if (ok && must_enclose_face >= 0 && s.face_side[must_enclose_face] != inner) ok = false;
        if (!ok) continue;
        Disc d = disc_of_cycle(g, c, outer_face);
        if (best.empty() || d.size() < best_disc.size()) {
            best = c;
            best_disc = d;
        }
        enclosing.emplace_back(c, std::move(d));
    }
    if (best.empty()) fail(ErrorCode::NoEnclosingCycle, "no cycle encloses the target");
    for (auto& [c, d] : enclosing) {
        for (int v = 0; v < g.vertex_count(); ++v)
            require(!best_disc.inside[v] || d.inside[v], ErrorCode::Internal,
                    "enclosing cycles are not nested; min-cycle not unique");
    }
    return best;
}

}  // namespace

std::vector<int> min_cycle_around_set(const Embedding& g, const std::vector<char>& blob, int outer_face) {
    std::vector<int> blob_list;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (blob[v]) blob_list.push_back(v);
    require(!blob_list.empty(), ErrorCode::BadInput, "empty blob");

    std::vector<char> hole_faces(g.face_count(), 0);
    for (int f = 0; f < g.face_count(); ++f)
        for (const Dart& d : g.face_walk(f))
            if (blob[d.v]) {
                hole_faces[f] = 1;
                break;
            }
    require(!hole_faces[outer_face], ErrorCode::NoEnclosingCycle, "target touches the outer face");

    Embedding g2 = g.remove_vertices(blob);
    auto cands = region_boundary_cycles(g, g2, hole_faces);
    return pick_enclosing(g, cands, blob_list, -1, outer_face);
}

std::vector<int> min_cycle(const Embedding& g, int v, int outer_face) {
    std::vector<char> blob(g.vertex_count(), 0);
    blob[v] = 1;
    return min_cycle_around_set(g, blob, outer_face);
}

std::vector<int> min_cycle_around_face(const Embedding& g, int hole_face, int outer_face) {
    require(hole_face != outer_face, ErrorCode::BadInput, "hole face is the outer face");
    std::vector<std::vector<int>> cands;
    std::unordered_set<std::string> seen;
    for (auto& cyc : walk_cycles(g.face_walk_vertices(hole_face))) {
        auto canon = canonical_cycle(cyc);
        std::string k;
        for (int x : canon) k += std::to_string(x) + ",";
        if (seen.insert(k).second) cands.push_back(canon);
    }
    return pick_enclosing(g, cands, {}, hole_face, outer_face);
}

TightCycles tight_concentric_cycles(const Embedding& g, const std::vector<char>& base_disc, int outer_face,
                                    int r) {
    TightCycles out;
    std::vector<char> cur = base_disc;
    for (int h = 1; h <= r; ++h) {
        std::vector<int> z;
        try {
            z = min_cycle_around_set(g, cur, outer_face);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NoEnclosingCycle) {
                out.failed_depth = h;
                return out;
            }
            throw;
        }
        Disc d = disc_of_cycle(g, z, outer_face);
        bool grew = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            require(!cur[v] || d.inside[v], ErrorCode::Internal, "concentric disc not nested");
            if (d.inside[v] && !cur[v]) grew = true;
        }
        require(grew, ErrorCode::Internal, "concentric disc did not grow");
        cur = d.inside;
        out.cycles.push_back(std::move(z));
        out.discs.push_back(std::move(d));
    }
    return out;
}

TightCycles tight_concentric_cycles_around_face(const Embedding& g, int hole_face, int outer_face, int r) {
    TightCycles out;
    if (r <= 0) return out;
    std::vector<int> z1;
    try {
        z1 = min_cycle_around_face(g, hole_face, outer_face);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NoEnclosingCycle) {
            out.failed_depth = 1;
            return out;
        }
        throw;
    }
    Disc d1 = disc_of_cycle(g, z1, outer_face);
    out.cycles.push_back(z1);
    out.discs.push_back(d1);
    if (r > 1) {
        TightCycles rest = tight_concentric_cycles(g, d1.inside, outer_face, r - 1);
        for (size_t i = 0; i < rest.cycles.size(); ++i) {
            out.cycles.push_back(std::move(rest.cycles[i]));
            out.discs.push_back(std::move(rest.discs[i]));
        }
        if (rest.failed_depth) out.failed_depth = *rest.failed_depth + 1;
    }
    return out;
}

}  // namespace ndp
