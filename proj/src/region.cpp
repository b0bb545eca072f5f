#include "surfhom/region.hpp"

#include <algorithm>

#include "surfhom/error.hpp"

namespace surfhom {

namespace {

constexpr uint8_t kTypeS = 0;
constexpr uint8_t kTypeT = 1;

struct Grower {
    const RadialGraph& rad;
    LiftArena& ar;
    uint64_t cap = 1;
    uint64_t mirrors = 0;

    void check_cap() const {
        SURFHOM_CHECK(ar.vertex_count() <= cap, "region exceeded its face bound");
    }

    // Crosses a line not seen before: attach the mirrored endpoint of e at v,
    // then extend the reflected chain in both directions along the new line
    // until it leaves the region.
    uint32_t mirror(uint32_t v, int e) {
        uint32_t w = ar.make_vertex(1 - ar.type_of(v));
        ar.join(v, w, e);
        ++mirrors;
        check_cap();
        for (const SideCopy& entry : rad.sides[e]) {
            uint32_t cv = v, cw = w;
            SideCopy fc = entry;
            while (true) {
                const Quad& q = rad.quads[fc.quad];
                int a = fc.pos;
                // quad corners alternate: the corner entering side a is a face
                // center exactly when a is even
                bool cv_enters = (ar.type_of(cv) == kTypeT) == (a % 2 == 0);
                int e0 = q.ids[(a + (cv_enters ? 3 : 1)) % 4];
                int e2 = q.ids[(a + (cv_enters ? 1 : 3)) % 4];
                int e1 = q.ids[(a + 2) % 4];
                uint32_t v1 = ar.next(cv, e0);
                if (v1 == kNoVertex) break;
                uint32_t w1 = ar.make_vertex(ar.type_of(cv));
                ar.join(v1, w1, e1);
                ar.join(w1, cw, e2);
                ++mirrors;
                check_cap();
                cv = v1;
                cw = w1;
                fc = rad.other_copy(SideCopy{fc.quad, (a + 2) % 4});
            }
        }
        return w;
    }
};

}  // namespace

std::vector<uint32_t> lift_path(const RadialWalk& walk, const RadialGraph& rad, LiftArena& arena,
                                RegionStats* stats) {
    SURFHOM_CHECK(rad.r >= 6, "tiling region test needs at least six sides");
    SURFHOM_CHECK(walk.size() % 2 == 0, "radial walk must alternate up and down steps");
    SURFHOM_CHECK(arena.rank() == rad.r, "arena rank mismatch");
    arena.reset();
    Grower grow{rad, arena};
    std::vector<uint32_t> path;
    path.reserve(walk.size() + 1);
    uint32_t v = arena.make_vertex(kTypeS);
    path.push_back(v);
    double peak = 0.0;
    for (size_t i = 0; i < walk.size(); ++i) {
        int e = walk[i];
        SURFHOM_CHECK(e >= 0 && e < rad.r, "radial edge out of range");
        SURFHOM_CHECK(arena.type_of(v) == (i % 2 == 0 ? kTypeS : kTypeT),
                      "radial walk out of phase");
        grow.cap = std::max<uint64_t>(5 * (i + 1), 1);
        uint32_t nv = arena.next(v, e);
        if (nv == kNoVertex) nv = grow.mirror(v, e);
        v = nv;
        path.push_back(v);
        peak = std::max(peak, (double)arena.vertex_count() / (double)(i + 1));
    }
    if (stats) {
        stats->faces = arena.vertex_count();
        stats->steps = walk.size();
        stats->mirrors = grow.mirrors;
        stats->peak_ratio = peak;
        stats->closed = v == path.front();
    }
    return path;
}

bool lift_closes(const RadialWalk& walk, const RadialGraph& rad, LiftArena& arena,
                 RegionStats* stats) {
    std::vector<uint32_t> path = lift_path(walk, rad, arena, stats);
    return path.back() == path.front();
}

RegionShape region_shape(const RadialGraph& rad, const LiftArena& arena) {
    SURFHOM_CHECK(rad.oriented, "region shape scan needs an oriented tiling");
    const int r = rad.r;
    std::vector<int> order_s(r), order_t(r);
    order_s[0] = 0;
    for (int i = 1; i < r; ++i) order_s[i] = rad.sigma[order_s[i - 1]];
    for (int i = 0; i < r; ++i) order_t[i] = (r - i) % r;
    std::vector<char> attached(r, 0);
    std::vector<char> f(r);
    RegionShape out;
    for (uint32_t v = 0; v < arena.vertex_count(); ++v) {
        int deg = arena.degree(v);
        for (int sl = 0; sl < deg; ++sl) attached[arena.slot_edge(v, sl)] = 1;
        const std::vector<int>& order = arena.type_of(v) == kTypeS ? order_s : order_t;
        for (int i = 0; i < r; ++i) f[i] = attached[order[i]];
        if (deg == 0) {
            out.max_boundary_run = std::max(out.max_boundary_run, r);
            out.convex_corners += r;
        } else {
            int run = 0;
            for (int i = 0; i < 2 * r; ++i) {
                if (f[i % r]) {
                    run = 0;
                } else {
                    ++run;
                    if (i >= r - 1) out.max_boundary_run = std::max(out.max_boundary_run, run);
                }
            }
            for (int i = 0; i < r; ++i)
                if (!f[i] && !f[(i + 1) % r]) ++out.convex_corners;
        }
        for (int sl = 0; sl < deg; ++sl) attached[arena.slot_edge(v, sl)] = 0;
    }
    return out;
}

}  // namespace surfhom
