#include "ndp/gen.hpp"

#include <algorithm>

namespace ndp {

namespace {

int largest_face(const Embedding& g) {
    int best = 0;
    for (int f = 1; f < g.face_count(); ++f)
        if (g.face_walk(f).size() > g.face_walk(best).size()) best = f;
    return best;
}

}  // namespace

PlaneGraph make_grid(int rows, int cols) {
    require(rows >= 1 && cols >= 1 && rows * cols >= 2, ErrorCode::BadParams, "grid too small");
    auto id = [&](int r, int c) { return grid_id(cols, r, c); };
    std::vector<std::vector<int>> rot(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            auto& v = rot[id(r, c)];
            if (c + 1 < cols) v.push_back(id(r, c + 1));  // E
            if (r + 1 < rows) v.push_back(id(r + 1, c));  // N
            if (c > 0) v.push_back(id(r, c - 1));         // W
            if (r > 0) v.push_back(id(r - 1, c));         // S
        }
    PlaneGraph pg;
    pg.g = Embedding::from_rotations(rows * cols, std::move(rot));
    pg.outer_face = largest_face(pg.g);
    return pg;
}

CylinderGraph make_cylinder_grid(int rings, int cols, const std::vector<int>& source_cols,
                                 const std::vector<int>& sink_cols) {
    require(rings >= 1 && cols >= 3, ErrorCode::BadParams, "cylinder grid too small");
    const int base = rings * cols;
    int extra = static_cast<int>(source_cols.size() + sink_cols.size());
    auto id = [&](int r, int c) { return r * cols + ((c % cols) + cols) % cols; };

    std::vector<std::vector<int>> rot(base + extra);
    CylinderGraph cg;
    int next = base;
    // pendant ids in demand order: sources first, then sinks
    std::vector<std::vector<int>> src_at(cols), snk_at(cols);
    for (int c : source_cols) {
        require(c >= 0 && c < cols, ErrorCode::BadParams, "source column out of range");
        cg.sources.push_back(next);
        src_at[c].push_back(next);
        rot[next].push_back(id(0, c));
        ++next;
    }
    for (int c : sink_cols) {
        require(c >= 0 && c < cols, ErrorCode::BadParams, "sink column out of range");
        cg.sinks.push_back(next);
        snk_at[c].push_back(next);
        rot[next].push_back(id(rings - 1, c));
        ++next;
    }

    for (int r = 0; r < rings; ++r)
        for (int c = 0; c < cols; ++c) {
            auto& v = rot[id(r, c)];
            v.push_back(id(r, c + 1));                                       // E
            if (r + 1 < rings) v.push_back(id(r + 1, c));                    // N
            if (r == rings - 1)                                              // sinks sit in the N slot
                for (int p : snk_at[c]) v.push_back(p);
            v.push_back(id(r, c - 1));                                       // W
            if (r > 0) v.push_back(id(r - 1, c));                            // S
            if (r == 0)                                                      // sources sit in the S slot
                for (int p : src_at[c]) v.push_back(p);
        }

    cg.g = Embedding::from_rotations(base + extra, std::move(rot));
    cg.cap1_face = cg.g.face_of(id(0, 0), id(0, 1));
    cg.cap2_face = cg.g.face_of(id(rings - 1, 1), id(rings - 1, 0));
    require(cg.cap1_face != cg.cap2_face, ErrorCode::Internal, "degenerate cylinder");
    return cg;
}

PlaneGraph make_wheel(int rim_size) {
    require(rim_size >= 3, ErrorCode::BadParams, "rim too small");
    const int hub = rim_size;
    std::vector<std::vector<int>> rot(rim_size + 1);
    for (int i = 0; i < rim_size; ++i) {
        rot[i] = {(i + 1) % rim_size, hub, (i - 1 + rim_size) % rim_size};
        rot[hub].push_back(i);
    }
    PlaneGraph pg;
    pg.g = Embedding::from_rotations(rim_size + 1, std::move(rot));
    // outer face: the rim face not containing the hub
    for (int f = 0; f < pg.g.face_count(); ++f)
        if (!pg.g.face_has_vertex(f, hub) && pg.g.face_walk(f).size() == static_cast<size_t>(rim_size))
            pg.outer_face = f;
    require(pg.outer_face >= 0, ErrorCode::Internal, "wheel outer face not found");
    return pg;
}

PlaneGraph make_cycle(int n) {
    require(n >= 3, ErrorCode::BadParams, "cycle too small");
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i - 1 + n) % n};
    PlaneGraph pg;
    pg.g = Embedding::from_rotations(n, std::move(rot));
    pg.outer_face = pg.g.face_of(1, 0);
    return pg;
}

PlaneGraph make_random_planar(int target_vertices, std::mt19937& rng) {
    require(target_vertices >= 3, ErrorCode::BadParams, "need at least a triangle");
    std::vector<std::vector<int>> rot = {{1, 2}, {2, 0}, {0, 1}};
    // outer face tracked by a representative dart
    std::pair<int, int> outer_dart{1, 0};

    auto build = [&]() { return Embedding::from_rotations(static_cast<int>(rot.size()), rot); };
    Embedding g = build();

    while (static_cast<int>(rot.size()) < target_vertices) {
        int outer = g.face_of(outer_dart.first, outer_dart.second);
        bool subdivide = std::uniform_int_distribution<int>(0, 2)(rng) == 0;
        if (subdivide) {
            // split a uniformly random edge
            int u = -1, v = -1, pick = -1, seen = 0;
            for (int a = 0; a < g.vertex_count(); ++a)
                for (int b : g.rotation(a)) {
                    if (a > b) continue;
                    if (std::uniform_int_distribution<int>(0, seen)(rng) == 0) pick = seen, u = a, v = b;
                    ++seen;
                }
            (void)pick;
            int w = static_cast<int>(rot.size());
            rot.push_back({u, v});
            *std::find(rot[u].begin(), rot[u].end(), v) = w;
            *std::find(rot[v].begin(), rot[v].end(), u) = w;
            if ((outer_dart.first == u && outer_dart.second == v) ||
                (outer_dart.first == v && outer_dart.second == u))
                outer_dart = {outer_dart.first, w};
        } else {
            // split a random inner face with distinct walk vertices
            std::vector<int> inner;
            for (int f = 0; f < g.face_count(); ++f) {
                if (f == outer) continue;
                auto verts = g.face_walk_vertices(f);
                std::vector<int> uniq = verts;
                std::sort(uniq.begin(), uniq.end());
                if (std::unique(uniq.begin(), uniq.end()) == uniq.end()) inner.push_back(f);
            }
            if (inner.empty()) continue;
            int f = inner[std::uniform_int_distribution<size_t>(0, inner.size() - 1)(rng)];
            auto walk = g.face_walk_vertices(f);
            int w = static_cast<int>(rot.size());
            rot.emplace_back();
            rot[w].push_back(walk[0]);
            for (int i = static_cast<int>(walk.size()) - 1; i >= 1; --i) rot[w].push_back(walk[i]);
            for (size_t i = 0; i < walk.size(); ++i) {
                int vi = walk[i];
                int prev = walk[(i + walk.size() - 1) % walk.size()];
                auto& rv = rot[vi];
                auto it = std::find(rv.begin(), rv.end(), prev);
                rv.insert(it + 1, w);
            }
        }
        g = build();
    }
    PlaneGraph pg;
    pg.g = std::move(g);
    pg.outer_face = pg.g.face_of(outer_dart.first, outer_dart.second);
    return pg;
}

std::vector<int> outer_walk_vertices(const PlaneGraph& pg) {
    std::vector<int> walk = pg.g.face_walk_vertices(pg.outer_face);
    std::vector<int> out;
    std::vector<char> seen(pg.g.vertex_count(), 0);
    for (int v : walk)
        if (!seen[v]) {
            seen[v] = 1;
            out.push_back(v);
        }
    return out;
}

}  // namespace ndp
