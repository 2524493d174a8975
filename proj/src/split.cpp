#include "ndp/split.hpp"

#include <algorithm>
#include <unordered_map>

namespace ndp {

std::vector<std::vector<int>> decompose_forest(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size());
    require(n >= 1, ErrorCode::BadInput, "empty forest");
    // acyclicity / range check
    {
        std::vector<int> state(n, 0);
        for (int v = 0; v < n; ++v) {
            int u = v;
            std::vector<int> trail;
            while (u >= 0 && state[u] == 0) {
                state[u] = 1;
                trail.push_back(u);
                require(parent[u] >= -1 && parent[u] < n && parent[u] != u, ErrorCode::NotAForest,
                        "bad parent pointer");
                u = parent[u];
            }
            require(u < 0 || state[u] == 2, ErrorCode::NotAForest, "cycle in parent pointers");
            for (int w : trail) state[w] = 2;
        }
    }

    std::vector<char> alive(n, 1);
    std::vector<int> child_count(n, 0);
    for (int v = 0; v < n; ++v)
        if (parent[v] >= 0) child_count[parent[v]]++;

    auto deg = [&](int v) {
        int d = child_count[v];
        if (parent[v] >= 0 && alive[parent[v]]) d += 1;
        return d;
    };
    auto is_root = [&](int v) { return parent[v] < 0 || !alive[parent[v]]; };

    std::vector<std::vector<int>> classes;
    int remaining = n;
    while (remaining > 0) {
        std::vector<int> cls;
        std::vector<char> taken(n, 0);
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || child_count[v] > 0) continue;  // leaves only
            if (is_root(v)) {  // the whole tree is this one vertex
                cls.push_back(v);
                taken[v] = 1;
                continue;
            }
            // climb through degree<=2 vertices; take the root only if it has
            // degree 1 left (then this is the only chain reaching it)
            cls.push_back(v);
            taken[v] = 1;
            int u = parent[v];
            while (alive[u] && !taken[u]) {
                if (is_root(u)) {
                    if (deg(u) != 1) break;
                } else if (deg(u) > 2) {
                    break;
                }
                cls.push_back(u);
                taken[u] = 1;
                if (is_root(u)) break;
                u = parent[u];
            }
        }
        require(!cls.empty(), ErrorCode::Internal, "leaf peeling stalled");
        for (int v : cls) {
            alive[v] = 0;
            if (parent[v] >= 0 && alive[parent[v]]) child_count[parent[v]]--;
        }
        // children counts toward dead parents do not matter further
        for (int v = 0; v < n; ++v)
            if (!alive[v]) child_count[v] = 0;
        for (int v = 0; v < n; ++v)
            if (alive[v]) child_count[v] = 0;
        for (int v = 0; v < n; ++v)
            if (alive[v] && parent[v] >= 0 && alive[parent[v]]) child_count[parent[v]]++;
        remaining -= static_cast<int>(cls.size());
        classes.push_back(std::move(cls));
    }
    return classes;
}

namespace {

int floor_log2(int x) {
    int l = 0;
    while ((1 << (l + 1)) <= x) ++l;
    return l;
}

}  // namespace

bool crosses_on_disc(std::pair<int, int> p1, std::pair<int, int> p2) {
    int a = p1.first, b = p1.second, c = p2.first, d = p2.second;
    if (a == c || a == d || b == c || b == d) return true;
    // interleaving: exactly one of c,d lies on the arc (a..b)
    auto between = [&](int lo, int hi, int x) {
        // does x lie on the arc going "up" from lo to hi (positions mod circle)?
        if (lo < hi) return lo < x && x < hi;
        return x > lo || x < hi;
    };
    return between(a, b, c) != between(a, b, d);
}

bool verify_split_witness(int circle_size, const std::vector<int>& pos_of, const SplitClass& cls) {
    const auto& w = cls.witness;
    if (w.segments.size() != 2 * w.parts.size()) return false;
    // sub-parts partition the class
    {
        std::vector<std::pair<int, int>> all;
        for (const auto& p : w.parts) all.insert(all.end(), p.begin(), p.end());
        auto a = all, b = cls.pairs;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
    }
    // segments disjoint, covering, in circular order
    std::vector<int> owner(circle_size, -1);
    int covered = 0;
    for (size_t i = 0; i < w.segments.size(); ++i) {
        const auto& s = w.segments[i];
        if (s.len <= 0 || s.len > circle_size) return false;
        for (int k = 0; k < s.len; ++k) {
            int p = (s.start + k) % circle_size;
            if (owner[p] >= 0) return false;
            owner[p] = static_cast<int>(i);
            ++covered;
        }
    }
    if (covered != circle_size) return false;
    // circular order: walking the circle from segment 0's start, segment ids
    // appear as consecutive blocks 0,1,2,...
    {
        int expect = 0;
        for (int k = 0; k < circle_size; ++k) {
            int p = (w.segments[0].start + k) % circle_size;
            if (owner[p] == expect) continue;
            if (owner[p] == expect + 1) {
                ++expect;
                continue;
            }
            return false;
        }
        if (expect != static_cast<int>(w.segments.size()) - 1) return false;
    }
    // straddling
    for (size_t i = 0; i < w.parts.size(); ++i) {
        for (auto [s, t] : w.parts[i]) {
            int ps = owner[pos_of[s]], pt = owner[pos_of[t]];
            int lo = static_cast<int>(2 * i), hi = lo + 1;
            if (!((ps == lo && pt == hi) || (ps == hi && pt == lo))) return false;
        }
    }
    return true;
}

std::vector<SplitClass> r_split_partition(const std::vector<int>& circle,
                                          const std::vector<std::pair<int, int>>& demands) {
    const int C = static_cast<int>(circle.size());
    std::vector<SplitClass> out;
    if (demands.empty()) return out;
    const int kappa = static_cast<int>(demands.size());
    require(C == 2 * kappa, ErrorCode::BadInput, "each terminal must appear in exactly one pair");

    int maxid = 0;
    for (int v : circle) maxid = std::max(maxid, v);
    std::vector<int> pos(maxid + 1, -1);
    for (int i = 0; i < C; ++i) {
        require(circle[i] >= 0 && pos[circle[i]] < 0, ErrorCode::BadInput, "repeated terminal on circle");
        pos[circle[i]] = i;
    }

    // delta bucketing: 2^{i-1} <= delta < 2^i. A pair with delta == kappa
    // (both arcs tied, kappa a power of two) would land one bucket past
    // ceil(log kappa); it joins the previous bucket's wrap class instead,
    // which its terminals straddle directly.
    int ceil_log = 0;
    while ((1 << ceil_log) < kappa) ++ceil_log;
    const int buckets = std::max(1, ceil_log);
    struct Oriented {
        int s, t;  // oriented so the short arc runs s -> t counter-clockwise
        std::pair<int, int> orig;
        bool force_wrap = false;
    };
    std::vector<std::vector<Oriented>> per_bucket(buckets);
    for (auto pr : demands) {
        int qs = pos[pr.first], qt = pos[pr.second];
        require(qs >= 0 && qt >= 0 && qs != qt, ErrorCode::BadInput, "pair terminal not on circle");
        int fwd = (qt - qs + C) % C + 1;  // terminals on the ccw arc s..t, inclusive
        int bwd = (qs - qt + C) % C + 1;
        Oriented o{pr.first, pr.second, pr, false};
        int delta = std::min(fwd, bwd) - 1;
        if (bwd < fwd)
            std::swap(o.s, o.t);
        else if (bwd == fwd && pos[o.t] < pos[o.s])
            std::swap(o.s, o.t);  // ties take the non-wrapping orientation
        int bucket = floor_log2(delta);
        if (bucket >= buckets) {
            require(bucket == buckets && delta == kappa, ErrorCode::Internal, "delta out of range");
            bucket -= 1;
            o.force_wrap = true;
            std::swap(o.s, o.t);  // wrap orientation for the fold-down
        }
        per_bucket[bucket].push_back(o);
    }

    for (int b = 0; b < buckets; ++b) {
        if (per_bucket[b].empty()) continue;
        const int m = 1 << (b + 1);       // segment size 2^i, half = 2^{i-1}
        const int half = 1 << b;
        const int z = (C + m - 1) / m;    // number of segments
        // class accumulators: A (even consecutive), B (odd consecutive),
        // C (same-segment halves), D (wrapping pairs)
        std::unordered_map<int, std::vector<std::pair<int, int>>> consec[2], same;
        std::vector<std::pair<int, int>> wraps;
        for (const Oriented& o : per_bucket[b]) {
            int qs = pos[o.s], qt = pos[o.t];
            if (qt < qs || o.force_wrap) {
                wraps.push_back(o.orig);
                continue;
            }
            int j = qs / m, j2 = qt / m;
            if (j == j2) {
                require(qs % m < half && qt % m >= half, ErrorCode::Internal,
                        "same-segment pair does not straddle the half mark");
                same[j].push_back(o.orig);
            } else {
                require(j2 == j + 1, ErrorCode::Internal, "pair skips a segment");
                consec[j % 2][j].push_back(o.orig);
            }
        }

        // Pads segments so consecutive listed segments cover the whole circle:
        // each extends forward up to the next one's start.
        auto pad_and_emit = [&](std::vector<std::pair<int, std::pair<int, int>>> segs,
                                std::vector<std::vector<std::pair<int, int>>> parts,
                                std::vector<std::pair<int, int>> all_pairs) {
            // segs: (start, (min_len, part_tag)) in circular order already
            SplitClass cls;
            cls.pairs = std::move(all_pairs);
            cls.witness.parts = std::move(parts);
            const int cnt = static_cast<int>(segs.size());
            for (int i = 0; i < cnt; ++i) {
                int start = segs[i].first;
                int next = segs[(i + 1) % cnt].first;
                int len = (next - start + C) % C;
                if (len == 0) len = C;  // single segment covering everything
                cls.witness.segments.push_back({start, len});
            }
            out.push_back(std::move(cls));
        };

        for (int parity = 0; parity < 2; ++parity) {
            if (consec[parity].empty()) continue;
            std::vector<int> js;
            for (auto& [j, _] : consec[parity]) js.push_back(j);
            std::sort(js.begin(), js.end());
            std::vector<std::pair<int, std::pair<int, int>>> segs;
            std::vector<std::vector<std::pair<int, int>>> parts;
            std::vector<std::pair<int, int>> all;
            for (int j : js) {
                segs.push_back({j * m, {}});
                segs.push_back({std::min((j + 1) * m, C), {}});
                parts.push_back(consec[parity][j]);
                for (auto& p : consec[parity][j]) all.push_back(p);
            }
            pad_and_emit(std::move(segs), std::move(parts), std::move(all));
        }
        if (!same.empty()) {
            std::vector<int> js;
            for (auto& [j, _] : same) js.push_back(j);
            std::sort(js.begin(), js.end());
            std::vector<std::pair<int, std::pair<int, int>>> segs;
            std::vector<std::vector<std::pair<int, int>>> parts;
            std::vector<std::pair<int, int>> all;
            for (int j : js) {
                segs.push_back({j * m, {}});
                segs.push_back({j * m + half, {}});
                parts.push_back(same[j]);
                for (auto& p : same[j]) all.push_back(p);
            }
            pad_and_emit(std::move(segs), std::move(parts), std::move(all));
        }
        if (!wraps.empty()) {
            const int a_len = std::min(m, kappa);
            std::vector<std::pair<int, std::pair<int, int>>> segs;
            segs.push_back({(C - a_len + C) % C, {}});  // suffix arc holding every wrap source
            segs.push_back({0, {}});                    // prefix arc holding every wrap sink
            std::vector<std::vector<std::pair<int, int>>> parts{wraps};
            pad_and_emit(std::move(segs), std::move(parts), wraps);
        }
    }

    // Every class must verify; the count is bounded by 4 * ceil(log2 kappa).
    for (const auto& cls : out)
        require(verify_split_witness(C, pos, cls), ErrorCode::Internal, "split witness failed to verify");
    require(static_cast<int>(out.size()) <= std::max(1, 4 * ceil_log), ErrorCode::Internal,
            "too many split classes");
    return out;
}

}  // namespace ndp
