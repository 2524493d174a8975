#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ndp/curves.hpp"
#include "ndp/embedding.hpp"
#include "ndp/flow.hpp"
#include "ndp/gen.hpp"

using namespace ndp;

namespace {

// Independent oracle for vertex-count distances in the vertex/face incidence
// structure: Bellman-Ford style relaxation, no deque tricks, no tie-breaking.
std::vector<int> brute_radial_dist(const Embedding& g, int u) {
    const int N = g.vertex_count() + g.face_count();
    const int INF = 1 << 28;
    std::vector<int> d(N, INF);
    d[u] = 1;
    auto cost = [&](int x) { return x < g.vertex_count() ? 1 : 0; };
    for (int round = 0; round < N + 1; ++round) {
        bool changed = false;
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int f : g.faces_at(v)) {
                int fn = g.vertex_count() + f;
                if (d[v] + cost(fn) < d[fn]) d[fn] = d[v] + cost(fn), changed = true;
                if (d[fn] + cost(v) < d[v]) d[v] = d[fn] + cost(v), changed = true;
            }
        if (!changed) break;
    }
    return d;
}

Embedding k3() { return Embedding::from_rotations(3, {{1, 2}, {2, 0}, {0, 1}}); }

}  // namespace

TEST_CASE("build_embedding: triangle has two faces and passes Euler") {
    Embedding g = k3();
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.face_count() == 2);
}

TEST_CASE("build_embedding: single edge has one face") {
    Embedding g = Embedding::from_rotations(2, {{1}, {0}});
    CHECK(g.face_count() == 1);
    CHECK(g.face_walk(0).size() == 2);
}

TEST_CASE("build_embedding: 3x3 grid has five faces") {
    PlaneGraph pg = make_grid(3, 3);
    CHECK(pg.g.face_count() == 5);
    CHECK(pg.g.face_walk(pg.outer_face).size() == 8);
}

TEST_CASE("build_embedding rejects malformed rotations") {
    CHECK_THROWS_AS(Embedding::from_rotations(2, {{1}, {}}), Error);       // asymmetric
    CHECK_THROWS_AS(Embedding::from_rotations(2, {{0, 1}, {0}}), Error);   // self loop
    CHECK_THROWS_AS(Embedding::from_rotations(1, {{0}}), Error);           // self loop
}

TEST_CASE("build_embedding rejects non-planar rotation systems") {
    // K5 with arbitrary rotations cannot satisfy Euler on the sphere.
    std::vector<std::vector<int>> rot(5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j) rot[i].push_back(j);
    CHECK_THROWS_AS(Embedding::from_rotations(5, rot), Error);
}

TEST_CASE("face tracing visits every dart exactly once") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        PlaneGraph pg = make_random_planar(14 + trial, rng);
        size_t darts = 0;
        for (const auto& w : pg.g.face_walks()) darts += w.size();
        CHECK(darts == 2 * static_cast<size_t>(pg.g.edge_count()));
    }
}

TEST_CASE("shortest_normal_curve: identity, adjacency, grid corners") {
    PlaneGraph pg = make_grid(3, 3);
    const Embedding& g = pg.g;

    NormalCurve same = shortest_normal_curve(g, 4, 4);
    CHECK(same.length() == 1);

    NormalCurve adj = shortest_normal_curve(g, 0, 1);
    CHECK(adj.length() == 2);
    CHECK(d_gnc(g, 0, 1) == 1);

    // Opposite corners share the outer face on the sphere, so the curve can
    // wrap around the drawing.
    NormalCurve diag = shortest_normal_curve(g, 0, 8);
    CHECK(diag.length() == 2);
    CHECK(d_gnc(g, 0, 8) == 1);

    // Confined to the disc (outer face forbidden) the curve must pass the
    // center: corner, face, center, face, corner.
    std::vector<char> forb_f(g.face_count(), 0);
    forb_f[pg.outer_face] = 1;
    NormalCurve in_disc = shortest_normal_curve(g, 0, 8, {}, forb_f);
    CHECK(in_disc.length() == 3);
    CHECK(in_disc.verts[1] == 4);
}

TEST_CASE("shortest_normal_curve respects forbidden elements") {
    PlaneGraph pg = make_grid(3, 3);
    std::vector<char> forb_v(9, 0), forb_f(pg.g.face_count(), 0);
    forb_v[4] = 1;  // block the center
    forb_f[pg.outer_face] = 1;
    NormalCurve c = shortest_normal_curve(pg.g, 0, 8, forb_v, forb_f);
    CHECK(c.length() == 4);  // around the center through a side midpoint
    for (size_t i = 1; i + 1 < c.verts.size(); ++i) CHECK(c.verts[i] != 4);
}

TEST_CASE("d_GNC is a metric (exhaustive, against brute-force relaxation)") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        PlaneGraph pg = trial == 0 ? make_grid(3, 4) : make_random_planar(8 + trial, rng);
        const Embedding& g = pg.g;
        const int n = g.vertex_count();
        REQUIRE(n <= 13);
        std::vector<std::vector<int>> d(n, std::vector<int>(n));
        for (int u = 0; u < n; ++u) {
            auto bd = brute_radial_dist(g, u);
            for (int v = 0; v < n; ++v) {
                d[u][v] = bd[v] - 1;
                CHECK(d_gnc(g, u, v) == d[u][v]);
            }
        }
        for (int u = 0; u < n; ++u) {
            CHECK(d[u][u] == 0);
            for (int v = 0; v < n; ++v) {
                CHECK(d[u][v] == d[v][u]);
                for (int w = 0; w < n; ++w) CHECK(d[u][w] <= d[u][v] + d[v][w]);
            }
        }
    }
}

TEST_CASE("lexicographic tie-break is deterministic") {
    PlaneGraph pg = make_grid(3, 3);
    NormalCurve a = shortest_normal_curve(pg.g, 0, 8);
    NormalCurve b = shortest_normal_curve(pg.g, 0, 8);
    CHECK(a.verts == b.verts);
    CHECK(a.faces == b.faces);
    verify_normal_curve(pg.g, a);
}

TEST_CASE("min_cycle: wheel hub is enclosed by the rim") {
    PlaneGraph pg = make_wheel(4);
    auto rim = min_cycle(pg.g, 4, pg.outer_face);
    std::vector<int> want{0, 1, 2, 3};
    std::vector<int> got = rim;
    std::sort(got.begin(), got.end());
    CHECK(got == want);
}

TEST_CASE("min_cycle: 5x5 grid center and off-center rings") {
    PlaneGraph pg = make_grid(5, 5);
    auto id = [&](int r, int c) { return grid_id(5, r, c); };

    auto ring = min_cycle(pg.g, id(2, 2), pg.outer_face);
    std::set<int> got(ring.begin(), ring.end());
    std::set<int> want{id(1, 1), id(1, 2), id(1, 3), id(2, 1), id(2, 3), id(3, 1), id(3, 2), id(3, 3)};
    CHECK(got == want);

    auto ring2 = min_cycle(pg.g, id(1, 1), pg.outer_face);
    std::set<int> got2(ring2.begin(), ring2.end());
    std::set<int> want2{id(0, 0), id(0, 1), id(0, 2), id(1, 0), id(1, 2), id(2, 0), id(2, 1), id(2, 2)};
    CHECK(got2 == want2);
}

TEST_CASE("min_cycle: no enclosing cycle on the outer face") {
    PlaneGraph pg = make_grid(3, 3);
    CHECK_THROWS_AS(min_cycle(pg.g, 0, pg.outer_face), Error);
}

TEST_CASE("tight_concentric_cycles on the 5x5 grid center") {
    PlaneGraph pg = make_grid(5, 5);
    auto id = [&](int r, int c) { return grid_id(5, r, c); };
    std::vector<char> base(25, 0);
    base[id(2, 2)] = 1;

    SUBCASE("r = 0 gives an empty family") {
        TightCycles tc = tight_concentric_cycles(pg.g, base, pg.outer_face, 0);
        CHECK(tc.cycles.empty());
        CHECK(!tc.failed_depth);
    }

    SUBCASE("r = 2 gives the 8-ring then the 16-ring") {
        TightCycles tc = tight_concentric_cycles(pg.g, base, pg.outer_face, 2);
        REQUIRE(tc.cycles.size() == 2);
        CHECK(tc.cycles[0].size() == 8);
        CHECK(tc.cycles[1].size() == 16);
        CHECK(tc.discs[0].size() == 9);
        CHECK(tc.discs[1].size() == 25);
    }

    SUBCASE("r = 3 fails at depth 3 with the maximal prefix") {
        TightCycles tc = tight_concentric_cycles(pg.g, base, pg.outer_face, 3);
        CHECK(tc.cycles.size() == 2);
        REQUIRE(tc.failed_depth.has_value());
        CHECK(*tc.failed_depth == 3);
    }
}

TEST_CASE("tight_concentric_cycles around a cylinder cuff") {
    CylinderGraph cg = make_cylinder_grid(4, 10, {}, {});
    TightCycles tc = tight_concentric_cycles_around_face(cg.g, cg.cap1_face, cg.cap2_face, 3);
    REQUIRE(tc.cycles.size() == 3);
    for (int h = 0; h < 3; ++h) {
        CHECK(tc.cycles[h].size() == 10);
        for (int v : tc.cycles[h]) CHECK(v / 10 == h);  // ring h exactly
    }
}

TEST_CASE("tight cycles are tight: recomputing min-cycle after contraction reproduces them") {
    std::mt19937 rng(3);
    PlaneGraph pg = make_grid(6, 6);
    std::vector<char> base(36, 0);
    base[grid_id(6, 2, 2)] = 1;
    TightCycles tc = tight_concentric_cycles(pg.g, base, pg.outer_face, 2);
    REQUIRE(tc.cycles.size() == 2);
    std::vector<char> cur = base;
    for (size_t h = 0; h < tc.cycles.size(); ++h) {
        auto again = min_cycle_around_set(pg.g, cur, pg.outer_face);
        auto a = again, b = tc.cycles[h];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        cur = tc.discs[h].inside;
    }
}

TEST_CASE("menger_vertex_disjoint basics") {
    SUBCASE("adjacent s,t with no other route") {
        Embedding g = Embedding::from_rotations(2, {{1}, {0}});
        auto r = menger_vertex_disjoint(g, {0}, {1});
        CHECK(r.paths.size() == 1);
        CHECK(r.cut.size() == 1);
    }
    SUBCASE("3x3 grid, left column to right column has 3 disjoint paths") {
        PlaneGraph pg = make_grid(3, 3);
        auto r = menger_vertex_disjoint(pg.g, {0, 3, 6}, {2, 5, 8});
        CHECK(r.paths.size() == 3);
        CHECK(r.cut.size() == 3);
        std::set<int> used;
        for (auto& p : r.paths)
            for (int v : p) CHECK(used.insert(v).second);
    }
    SUBCASE("disconnected sets give zero paths and an empty cut") {
        Embedding g = Embedding::from_rotations(4, {{1}, {0}, {3}, {2}});
        auto r = menger_vertex_disjoint(g, {0}, {2});
        CHECK(r.paths.empty());
        CHECK(r.cut.empty());
    }
}

TEST_CASE("min_separating_normal_curve: path graph gives a length-1 loop") {
    Embedding g = Embedding::from_rotations(3, {{1}, {0, 2}, {1}});
    auto sc = min_separating_normal_curve(g, 0, 2);
    CHECK(sc.curve.length() == 1);
    CHECK(sc.curve.verts[0] == 1);
    CHECK(sc.side_s[0]);
    CHECK(sc.side_t[2]);
}

TEST_CASE("min_separating_normal_curve: K4 minus an edge") {
    // s=0, t=3 non-adjacent; connectivity 2 through {1,2}.
    Embedding g = Embedding::from_rotations(4, {{1, 2}, {0, 3, 2}, {0, 1, 3}, {1, 2}});
    auto sc = min_separating_normal_curve(g, 0, 3);
    CHECK(sc.curve.length() == 2);
    std::set<int> cv(sc.curve.verts.begin(), sc.curve.verts.end());
    CHECK(cv == std::set<int>{1, 2});
}

TEST_CASE("min_separating_normal_curve length equals Menger count; sides connected") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        PlaneGraph pg = trial % 2 ? make_random_planar(10 + trial / 2, rng) : make_grid(4, 4);
        const Embedding& g = pg.g;
        int n = g.vertex_count();
        std::uniform_int_distribution<int> pick(0, n - 1);
        int s = pick(rng), t = pick(rng);
        if (s == t || g.has_edge(s, t)) continue;
        auto mr = menger_vertex_disjoint(g, {s}, {t}, true);
        auto sc = min_separating_normal_curve(g, s, t);
        CHECK(sc.curve.length() == static_cast<int>(mr.paths.size()));
        CHECK(!sc.side_s[t]);
        CHECK(!sc.side_t[s]);
        // both sides plus the curve vertices induce connected graphs
        for (int side = 0; side < 2; ++side) {
            std::vector<char> keep(n, 0);
            int cnt = 0, start = -1;
            for (int v = 0; v < n; ++v)
                if ((side == 0 ? sc.side_s[v] : sc.side_t[v])) keep[v] = 1;
            for (int v : sc.curve.verts) keep[v] = 1;
            for (int v = 0; v < n; ++v)
                if (keep[v]) ++cnt, start = v;
            // BFS
            std::vector<char> seen(n, 0);
            std::vector<int> st{start};
            seen[start] = 1;
            int reached = 0;
            while (!st.empty()) {
                int u = st.back();
                st.pop_back();
                ++reached;
                for (int w : g.rotation(u))
                    if (keep[w] && !seen[w]) seen[w] = 1, st.push_back(w);
            }
            CHECK(reached == cnt);
        }
        // separation: every s-t path hits the curve's vertex set
        std::vector<char> rm(n, 0);
        for (int v : sc.curve.verts) rm[v] = 1;
        Embedding g2 = g.remove_vertices(rm);
        bool connected = false;
        {
            std::vector<char> seen(n, 0);
            std::vector<int> st{s};
            seen[s] = 1;
            while (!st.empty()) {
                int u = st.back();
                st.pop_back();
                if (u == t) connected = true;
                for (int w : g2.rotation(u))
                    if (!seen[w]) seen[w] = 1, st.push_back(w);
            }
        }
        CHECK(!connected);
    }
}
