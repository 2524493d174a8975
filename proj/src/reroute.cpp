#include "ndp/reroute.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace ndp {

namespace {

int64_t ek(int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<int64_t>(a) << 32 | static_cast<uint32_t>(b);
}

std::vector<int> positions_on(const std::vector<int>& path, const std::vector<char>& member) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(path.size()); ++i)
        if (member[path[i]]) idx.push_back(i);
    return idx;
}

// Arc of the cycle from a to b walking the stored order (forward) or against
// it, inclusive of both endpoints.
std::vector<int> cycle_arc(const std::vector<int>& cycle, int a, int b, bool forward) {
    const int L = static_cast<int>(cycle.size());
    int ia = -1, ib = -1;
    for (int i = 0; i < L; ++i) {
        if (cycle[i] == a) ia = i;
        if (cycle[i] == b) ib = i;
    }
    std::vector<int> arc;
    int step = forward ? 1 : L - 1;
    for (int i = ia;; i = (i + step) % L) {
        arc.push_back(cycle[i]);
        if (i == ib) break;
    }
    return arc;
}

// One shadow pass of path tails against cycle Z inside the host plane graph.
// The marker plays the role of s: it certifies which side of a bump-plus-arc
// cycle is the contracted region.
struct ShadowPass {
    const PlaneGraph& g;
    const std::vector<int>& Z;
    std::vector<char> on_z;
    std::unordered_set<int64_t> z_edge;

    ShadowPass(const PlaneGraph& g_, const std::vector<int>& z) : g(g_), Z(z) {
        on_z.assign(g.g.vertex_count(), 0);
        for (int v : Z) on_z[v] = 1;
        for (size_t i = 0; i < Z.size(); ++i) z_edge.insert(ek(Z[i], Z[(i + 1) % Z.size()]));
    }

    std::vector<int> shadow(const std::vector<int>& path, int i, int j, int marker) const {
        int q1 = path[i], q2 = path[j];
        if (j == i + 1 && z_edge.count(ek(q1, q2))) return {q1, q2};
        std::vector<int> arc_f = cycle_arc(Z, q1, q2, true);
        std::vector<int> arc_b = cycle_arc(Z, q1, q2, false);
        auto marker_inside = [&](const std::vector<int>& arc) {
            // W = bump followed by the arc interior reversed (q2 back to q1).
            std::vector<int> w(path.begin() + i, path.begin() + j + 1);
            for (int t = static_cast<int>(arc.size()) - 2; t >= 1; --t) w.push_back(arc[t]);
            CycleSides s = cycle_sides(g.g, w);
            require(s.face_side[g.outer_face] >= 0, ErrorCode::Internal, "bump cycle side unknown");
            require(s.vertex_side[marker] >= 0, ErrorCode::Internal, "marker touches bump cycle");
            return s.vertex_side[marker] == 1 - s.face_side[g.outer_face];
        };
        bool in_b = marker_inside(arc_b);
        bool in_f = marker_inside(arc_f);
        require(in_b != in_f, ErrorCode::Internal, "marker inside both or neither bump disc");
        // marker inside bump+arc_b means arc_f is the far arc: the shadow
        return in_b ? arc_f : arc_b;
    }

    // Replace the stretch of `tail` between its first and last Z-visits by a
    // simple walk through the union of its bump shadows.
    std::vector<int> run(const std::vector<int>& tail, int marker) const {
        std::vector<int> vis = positions_on(tail, on_z);
        if (vis.size() <= 1) return tail;
        int first = vis.front(), last = vis.back();

        std::unordered_set<int64_t> shadow_edges;
        for (size_t k = 0; k + 1 < vis.size(); ++k) {
            auto sh = shadow(tail, vis[k], vis[k + 1], marker);
            for (size_t t = 0; t + 1 < sh.size(); ++t) shadow_edges.insert(ek(sh[t], sh[t + 1]));
        }
        std::vector<int> prev(g.g.vertex_count(), -2);
        std::queue<int> q;
        q.push(tail[first]);
        prev[tail[first]] = -1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (u == tail[last]) break;
            for (int v : g.g.rotation(u)) {
                if (prev[v] != -2 || !shadow_edges.count(ek(u, v))) continue;
                prev[v] = u;
                q.push(v);
            }
        }
        require(prev[tail[last]] != -2, ErrorCode::Internal,
                "shadow union does not connect the first and last visits");
        std::vector<int> mid;
        for (int v = tail[last]; v != -1; v = prev[v]) mid.push_back(v);
        std::reverse(mid.begin(), mid.end());

        std::vector<int> out(tail.begin(), tail.begin() + first);
        out.insert(out.end(), mid.begin(), mid.end());
        out.insert(out.end(), tail.begin() + last + 1, tail.end());
        return out;
    }
};

void check_disjoint(const std::vector<std::vector<int>>& paths, bool internally) {
    std::unordered_set<int> used, endpoints;
    for (const auto& p : paths) {
        require(!p.empty(), ErrorCode::Internal, "empty path");
        for (size_t i = 0; i < p.size(); ++i) {
            bool endpoint = i == 0 || i + 1 == p.size();
            if (internally && endpoint) {
                endpoints.insert(p[i]);
                continue;
            }
            require(used.insert(p[i]).second, ErrorCode::Internal, "paths share a vertex");
        }
    }
    for (int e : endpoints) require(!used.count(e), ErrorCode::Internal, "endpoint reused internally");
}

}  // namespace

bool monotone_wrt(const std::vector<int>& path, const std::vector<int>& cycle) {
    std::unordered_set<int> cyc(cycle.begin(), cycle.end());
    int first = -1, last = -1;
    for (int i = 0; i < static_cast<int>(path.size()); ++i)
        if (cyc.count(path[i])) {
            if (first < 0) first = i;
            last = i;
        }
    if (first < 0) return true;
    for (int i = first; i <= last; ++i)
        if (!cyc.count(path[i])) return false;
    std::unordered_set<int64_t> ce;
    for (size_t i = 0; i < cycle.size(); ++i) ce.insert(ek(cycle[i], cycle[(i + 1) % cycle.size()]));
    for (int i = first; i < last; ++i)
        if (!ce.count(ek(path[i], path[i + 1]))) return false;
    return true;
}

PathSet reroute_monotone_cycle(const PlaneGraph& h, const std::vector<int>& cycle,
                               const std::vector<std::vector<int>>& paths, int s, int t) {
    Disc dc = disc_of_cycle(h.g, cycle, h.outer_face);
    std::vector<char> on_c(h.g.vertex_count(), 0);
    for (int v : cycle) on_c[v] = 1;
    require(dc.contains(s) && !on_c[s], ErrorCode::PreconditionViolated, "s must lie strictly inside C");
    require(!dc.contains(t), ErrorCode::PreconditionViolated, "t must lie outside D(C)");
    require(h.g.face_has_vertex(h.outer_face, t), ErrorCode::PreconditionViolated,
            "t must be incident on the outer face");
    {
        auto mc = min_cycle(h.g, s, h.outer_face);
        auto a = mc, b = cycle;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        require(a == b, ErrorCode::PreconditionViolated, "C is not min-cycle(H, s)");
    }
    for (const auto& p : paths)
        require(p.front() == s && p.back() == t, ErrorCode::PreconditionViolated, "paths must run s to t");
    check_disjoint(paths, true);

    ShadowPass pass(h, cycle);
    std::vector<std::vector<int>> out;
    out.reserve(paths.size());
    for (const auto& p : paths) out.push_back(pass.run(p, s));

    for (const auto& p : out)
        require(monotone_wrt(p, cycle), ErrorCode::Internal, "rerouted path not monotone");
    check_disjoint(out, true);
    return PathSet::of(std::move(out));
}

PathSet reroute_monotone_family(const PlaneGraph& g, const std::vector<char>& base_disc,
                                const std::vector<std::vector<int>>& cycles,
                                const std::vector<Disc>& cycle_discs,
                                const std::vector<std::vector<int>>& paths) {
    require(cycles.size() == cycle_discs.size(), ErrorCode::BadInput, "cycles/discs mismatch");
    check_disjoint(paths, false);
    for (const auto& p : paths) {
        require(base_disc[p.front()], ErrorCode::PreconditionViolated, "path must start on the base disc");
        for (size_t i = 1; i < p.size(); ++i)
            require(!base_disc[p[i]], ErrorCode::PreconditionViolated, "path re-enters the base disc");
        if (!cycles.empty())
            require(!cycle_discs.back().contains(p.back()), ErrorCode::PreconditionViolated,
                    "path must end beyond the last cycle");
    }

    std::vector<std::vector<int>> cur = paths;
    for (size_t h = 0; h < cycles.size(); ++h) {
        const std::vector<char>& prev_inside = h == 0 ? base_disc : cycle_discs[h - 1].inside;
        int marker = -1;
        for (int v = 0; v < g.g.vertex_count() && marker < 0; ++v)
            if (prev_inside[v]) marker = v;
        require(marker >= 0, ErrorCode::BadInput, "empty base disc");

        ShadowPass pass(g, cycles[h]);
        for (auto& p : cur) {
            int vp = 0;
            for (int i = 0; i < static_cast<int>(p.size()); ++i)
                if (prev_inside[p[i]]) vp = i;
            std::vector<int> tail(p.begin() + vp, p.end());
            // Tightness keeps bump interiors outside the current disc.
            std::vector<int> vis = positions_on(tail, pass.on_z);
            for (size_t k = 0; k + 1 < vis.size(); ++k)
                for (int i = vis[k] + 1; i < vis[k + 1]; ++i)
                    require(!cycle_discs[h].contains(tail[i]), ErrorCode::Internal,
                            "bump dips inside a tight cycle");
            std::vector<int> new_tail = pass.run(tail, marker);
            p.resize(vp);
            p.insert(p.end(), new_tail.begin(), new_tail.end());
        }
    }

    for (const auto& p : cur)
        for (const auto& z : cycles)
            require(monotone_wrt(p, z), ErrorCode::Internal, "family reroute left a non-monotone path");
    check_disjoint(cur, false);
    for (size_t i = 0; i < cur.size(); ++i)
        require(cur[i].front() == paths[i].front() && cur[i].back() == paths[i].back(), ErrorCode::Internal,
                "family reroute changed endpoints");
    return PathSet::of(std::move(cur));
}

}  // namespace ndp
