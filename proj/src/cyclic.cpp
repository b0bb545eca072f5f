#include "surfhom/cyclic.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "surfhom/error.hpp"

namespace surfhom {

namespace {

constexpr uint8_t kTypeS = 0;
constexpr uint8_t kTypeT = 1;

// One edge of a line, bundled with the side copy of the quad the line is about
// to cross; x is the corner entering side ahead.pos.
struct LineStep {
    uint32_t x = kNoVertex;
    uint32_t y = kNoVertex;
    int edge = -1;
    SideCopy ahead;
};

LineStep make_step(const LiftArena& ar, uint32_t u, uint32_t v, int edge, SideCopy ahead) {
    bool u_enters = (ar.type_of(u) == kTypeT) == (ahead.pos % 2 == 0);
    if (!u_enters) std::swap(u, v);
    return LineStep{u, v, edge, ahead};
}

// Crosses the quad ahead: the facing edge sits at position pos + 2 and joins
// corner(pos + 3) to corner(pos + 2).  Empty when the line leaves the region.
std::optional<LineStep> face_step(const RadialGraph& rad, const LiftArena& ar,
                                  const LineStep& s) {
    const Quad& q = rad.quads[s.ahead.quad];
    int a = s.ahead.pos;
    uint32_t c2 = ar.next(s.y, q.ids[(a + 1) % 4]);
    uint32_t c3 = ar.next(s.x, q.ids[(a + 3) % 4]);
    if (c2 == kNoVertex || c3 == kNoVertex) return std::nullopt;
    int f = q.ids[(a + 2) % 4];
    SURFHOM_CHECK(ar.next(c3, f) == c2, "region not induced along a line");
    return make_step(ar, c3, c2, f, rad.other_copy(SideCopy{s.ahead.quad, (a + 2) % 4}));
}

// Tags every region edge with the id of its supporting line, walking each
// maximal chain of facing edges once.  Stored tags are id + 1 since join()
// zeroes the tag slots of a fresh edge.
int tag_lines(const RadialGraph& rad, LiftArena& ar) {
    int lines = 0;
    uint64_t guard = (uint64_t)ar.vertex_count() * (uint64_t)rad.r + 16;
    for (uint32_t v = 0; v < ar.vertex_count(); ++v) {
        int deg = ar.degree(v);
        for (int sl = 0; sl < deg; ++sl) {
            uint32_t w = ar.slot_nbr(v, sl);
            if (w < v) continue;
            int e = ar.slot_edge(v, sl);
            if (ar.get_tag(v, e) != 0) continue;
            uint32_t id = (uint32_t)++lines;
            ar.set_tag(v, e, id);
            ar.set_tag(w, e, id);
            for (const SideCopy& side : rad.sides[e]) {
                LineStep cur = make_step(ar, v, w, e, side);
                uint64_t steps = 0;
                while (auto nxt = face_step(rad, ar, cur)) {
                    cur = *nxt;
                    SURFHOM_CHECK(ar.get_tag(cur.x, cur.edge) == 0, "line crossed itself");
                    ar.set_tag(cur.x, cur.edge, id);
                    ar.set_tag(cur.y, cur.edge, id);
                    SURFHOM_CHECK(++steps <= guard, "line trace ran away");
                }
            }
        }
    }
    return lines;
}

int tag_of(const LiftArena& ar, uint32_t v, int e) { return (int)ar.get_tag(v, e) - 1; }

// Tag of the line crossing the quad ahead of s, read off the quad's other two
// sides.  Strict reads need both sides present, loose reads either one; -1
// when unreadable.
int perp_tag_at(const RadialGraph& rad, const LiftArena& ar, const LineStep& s, bool strict) {
    const Quad& q = rad.quads[s.ahead.quad];
    int a = s.ahead.pos;
    uint32_t c2 = ar.next(s.y, q.ids[(a + 1) % 4]);
    uint32_t c3 = ar.next(s.x, q.ids[(a + 3) % 4]);
    if (strict && (c2 == kNoVertex || c3 == kNoVertex)) return -1;
    int t = -1;
    if (c2 != kNoVertex) t = tag_of(ar, s.y, q.ids[(a + 1) % 4]);
    if (c3 != kNoVertex) {
        int t2 = tag_of(ar, s.x, q.ids[(a + 3) % 4]);
        SURFHOM_CHECK(t == -1 || t == t2, "quad corners on different lines");
        t = t2;
    }
    return t;
}

// The walk step as a line crossing, heading into the quad right of travel.
LineStep walk_crossing(const LiftedPower& lp, const RadialGraph& rad, const LiftArena& ar,
                       int step) {
    uint32_t u = lp.path[step];
    uint32_t w = lp.path[step + 1];
    int e = lp.period[step % lp.n];
    SideCopy ahead = ar.type_of(u) == kTypeS ? rad.right_of_up[e] : rad.right_of_down[e];
    return make_step(ar, u, w, e, ahead);
}

struct TracedLine {
    std::vector<LineStep> steps;  // forward order, ahead pointing forward
    int anchor = -1;
};

TracedLine trace_from(const RadialGraph& rad, const LiftArena& ar, const LineStep& seed) {
    uint64_t guard = (uint64_t)ar.vertex_count() * (uint64_t)rad.r + 16;
    uint64_t steps = 0;
    std::vector<LineStep> back;
    LineStep rev = make_step(ar, seed.x, seed.y, seed.edge, rad.other_copy(seed.ahead));
    while (auto nxt = face_step(rad, ar, rev)) {
        rev = *nxt;
        back.push_back(rev);
        SURFHOM_CHECK(++steps <= guard, "line trace ran away");
    }
    TracedLine out;
    out.steps.reserve(back.size() + 8);
    for (auto it = back.rbegin(); it != back.rend(); ++it)
        out.steps.push_back(make_step(ar, it->x, it->y, it->edge, rad.other_copy(it->ahead)));
    out.anchor = (int)out.steps.size();
    out.steps.push_back(seed);
    while (auto nxt = face_step(rad, ar, out.steps.back())) {
        out.steps.push_back(*nxt);
        SURFHOM_CHECK(++steps <= guard, "line trace ran away");
    }
    return out;
}

TracedLine trace_line(const LiftedPower& lp, const RadialGraph& rad, const LiftArena& ar,
                      int anchor_step) {
    return trace_from(rad, ar, walk_crossing(lp, rad, ar, anchor_step));
}

// The crossing as an oriented primal edge, tail on the bank behind the line.
LiftEdge oriented_crossing(const RadialGraph& rad, const LiftArena& ar, const LineStep& s) {
    SideCopy rx = ar.type_of(s.x) == kTypeS ? rad.right_of_up[s.edge] : rad.right_of_down[s.edge];
    if (rx == s.ahead) return LiftEdge{s.x, s.y, s.edge};
    SideCopy ry = ar.type_of(s.y) == kTypeS ? rad.right_of_up[s.edge] : rad.right_of_down[s.edge];
    SURFHOM_CHECK(ry == s.ahead, "crossing faces neither side");
    return LiftEdge{s.y, s.x, s.edge};
}

}  // namespace

LiftedPower lift_power(const RadialWalk& c, const RadialGraph& rad, LiftArena& arena,
                       RegionStats* stats) {
    LiftedPower lp;
    lp.period = c;
    lp.n = (int)c.size();
    RadialWalk power;
    power.reserve(c.size() * 6);
    for (int i = 0; i < 6; ++i) power.insert(power.end(), c.begin(), c.end());
    lp.path = lift_path(power, rad, arena, stats);
    SURFHOM_CHECK(lp.path[lp.n] != lp.path[0], "walk is contractible");

    const int total = 6 * lp.n;
    lp.tag_count = tag_lines(rad, arena);
    lp.step_tag.resize(total);
    for (int s = 0; s < total; ++s) lp.step_tag[s] = tag_of(arena, lp.path[s], c[s % lp.n]);
    lp.tau_of.assign(lp.tag_count, -1);
    lp.tau_inv.assign(lp.tag_count, -1);
    for (int s = 0; s + lp.n < total; ++s) {
        int a = lp.step_tag[s], b = lp.step_tag[s + lp.n];
        SURFHOM_CHECK(lp.tau_of[a] == -1 || lp.tau_of[a] == b, "line translation inconsistent");
        SURFHOM_CHECK(lp.tau_inv[b] == -1 || lp.tau_inv[b] == a, "line translation inconsistent");
        lp.tau_of[a] = b;
        lp.tau_inv[b] = a;
    }
    return lp;
}

LineTables classify_lines(const LiftedPower& lp, const RadialGraph& rad, const LiftArena& arena) {
    const int n = lp.n, total = 6 * n;
    LineTables lt;
    lt.meets_translate.assign(lp.tag_count, 0);
    lt.parity.assign(lp.tag_count, std::array<char, 3>{});
    lt.anchor_step.assign(lp.tag_count, -1);
    lt.is_transversal.assign(lp.tag_count, 0);

    // A line meets its translate only at an interior vertex, where all four
    // sides of the quad instance around the crossing are present.
    std::vector<std::vector<int>> head_quads(rad.r);
    for (int q = 0; q < (int)rad.quads.size(); ++q)
        head_quads[rad.quads[q].ids[0]].push_back(q);
    for (uint32_t c0 = 0; c0 < arena.vertex_count(); ++c0) {
        if (arena.type_of(c0) != kTypeT) continue;
        int deg = arena.degree(c0);
        for (int sl = 0; sl < deg; ++sl) {
            int e0 = arena.slot_edge(c0, sl);
            uint32_t c1 = arena.slot_nbr(c0, sl);
            for (int qi : head_quads[e0]) {
                const Quad& q = rad.quads[qi];
                uint32_t c2 = arena.next(c1, q.ids[1]);
                if (c2 == kNoVertex) continue;
                uint32_t c3 = arena.next(c2, q.ids[2]);
                if (c3 == kNoVertex) continue;
                if (arena.next(c3, q.ids[3]) != c0) continue;
                int t02 = tag_of(arena, c0, e0);
                int t13 = tag_of(arena, c1, q.ids[1]);
                SURFHOM_CHECK(t02 == tag_of(arena, c3, q.ids[2]) &&
                                  t13 == tag_of(arena, c0, q.ids[3]),
                              "facing edges on different lines");
                if (lp.tau_of[t02] == t13) lt.meets_translate[t02] = 1;
                if (lp.tau_of[t13] == t02) lt.meets_translate[t13] = 1;
            }
        }
    }

    for (int i = 0; i < 3; ++i)
        for (int s = (i + 1) * n; s < (i + 2) * n; ++s) lt.parity[lp.step_tag[s]][i] ^= 1;

    for (int s = 0; s + n < total; ++s) {
        int t = lp.step_tag[s];
        if (lp.tau_of[t] != t) continue;
        SURFHOM_CHECK(lt.invariant_tag == -1 || lt.invariant_tag == t, "two invariant lines");
        lt.invariant_tag = t;
        if (lt.anchor_step[t] == -1) lt.anchor_step[t] = s;
    }

    for (int s = 2 * n; s < 3 * n; ++s) {
        int t = lp.step_tag[s];
        if (lt.is_transversal[t]) continue;
        if (lt.meets_translate[t] || !lt.parity[t][1] || lt.parity[t][0] || lt.parity[t][2])
            continue;
        lt.is_transversal[t] = 1;
        lt.anchor_step[t] = s;
        lt.transversals.push_back(t);
    }
    SURFHOM_CHECK(!lt.transversals.empty(), "no transversal between consecutive base points");
    lt.chosen = lt.transversals.front();

    // Translates of a transversal are transversal; they inherit the anchor of
    // their representative so that all lifts of one curve agree in orientation.
    for (int t0 : lt.transversals) {
        int a0 = lt.anchor_step[t0];
        for (int dir = 0; dir < 2; ++dir) {
            const std::vector<int>& step = dir == 0 ? lp.tau_of : lp.tau_inv;
            int k = dir == 0 ? 1 : -1;
            for (int t = step[t0]; t != -1; t = step[t], k += dir == 0 ? 1 : -1) {
                SURFHOM_CHECK(t != t0, "transversal translates into itself");
                lt.is_transversal[t] = 1;
                int a = a0 + k * n;
                if (a < 0 || a >= total) continue;
                SURFHOM_CHECK(lp.step_tag[a] == t, "translate out of phase with the walk");
                SURFHOM_CHECK(lt.anchor_step[t] == -1 || lt.anchor_step[t] == a,
                              "translate anchored twice");
                lt.anchor_step[t] = a;
            }
        }
    }

    lt.family[2] = lt.chosen;
    for (int j = 3; j < 6; ++j) {
        lt.family[j] = lp.tau_of[lt.family[j - 1]];
        SURFHOM_CHECK(lt.family[j] != -1, "missing translate of the chosen line");
    }
    for (int j = 1; j >= 0; --j) {
        lt.family[j] = lp.tau_inv[lt.family[j + 1]];
        SURFHOM_CHECK(lt.family[j] != -1, "missing translate of the chosen line");
    }
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            SURFHOM_CHECK(lt.family[i] != lt.family[j], "family of the chosen line collides");
    return lt;
}

namespace {

bool kept_band_pair(const Slice& sl, uint32_t v, uint32_t w) {
    int a = sl.band[v], b = sl.band[w];
    if (a > b) std::swap(a, b);
    return (a == 0 && b == 0) || (a == -1 && b == 0) || (a == 0 && b == 1);
}

// Follows a candidate invariant line away from its crossing with the chosen
// one.  A genuine invariant line crosses the m - 1 transversals interior to
// the belt and then a boundary translate of the chosen line; which translate
// is reached tells the two rays apart.
bool lambda_ray(const RadialGraph& rad, const LiftArena& ar, const LineTables& lt, LineStep cur,
                int m, int& boundary) {
    for (int k = 1;; ++k) {
        int p = perp_tag_at(rad, ar, cur, true);
        if (p == -1) return false;
        if (p == lt.family[1] || p == lt.family[3]) {
            boundary = p;
            return k == m;
        }
        if (k == m || !lt.is_transversal[p]) return false;
        auto nxt = face_step(rad, ar, cur);
        if (!nxt) return false;
        cur = *nxt;
    }
}

}  // namespace

Slice extract_belt(const LiftedPower& lp, const LineTables& lt, const RadialGraph& rad,
                   const LiftArena& arena) {
    const uint32_t count = arena.vertex_count();
    const int n = lp.n;
    constexpr int kNoBand = 1 << 29;
    Slice sl;
    sl.band.assign(count, kNoBand);
    std::vector<int8_t> fam_of(lp.tag_count, -1);
    for (int j = 0; j < 6; ++j) fam_of[lt.family[j]] = (int8_t)j;

    // Bands count fundamental domains away from the one holding x3; crossing
    // the j-th family line toggles between bands j - 3 and j - 2, every other
    // edge stays put.  Labels saturate beyond the tracked window.
    std::vector<uint32_t> queue;
    queue.reserve(count);
    uint32_t x3 = lp.path[(size_t)3 * n];
    sl.band[x3] = 0;
    queue.push_back(x3);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        uint32_t v = queue[qi];
        int deg = arena.degree(v);
        for (int s = 0; s < deg; ++s) {
            uint32_t w = arena.slot_nbr(v, s);
            int bw = sl.band[v];
            int8_t j = fam_of[tag_of(arena, v, arena.slot_edge(v, s))];
            if (j >= 0) {
                SURFHOM_CHECK(bw == j - 3 || bw == j - 2, "band out of step with the family");
                bw = bw == j - 3 ? j - 2 : j - 3;
            }
            if (sl.band[w] == kNoBand) {
                sl.band[w] = bw;
                queue.push_back(w);
            } else {
                SURFHOM_CHECK(sl.band[w] == bw, "bands disagree around a face");
            }
        }
    }
    for (uint32_t v = 0; v < count; ++v)
        SURFHOM_CHECK(sl.band[v] != kNoBand, "region is not connected");
    for (int i = 0; i <= 6; ++i)
        SURFHOM_CHECK(sl.band[lp.path[(size_t)i * n]] == i - 3, "base points out of band");

    // The region may be bounded by an invariant line the walk never crosses;
    // such a line has no walk anchor and is found by scanning the chosen line
    // for a crossing with a line that reaches the boundary translates of both
    // neighbouring belts.  Crossing three consecutive translates proves it
    // invariant.
    TracedLine chosen_trace = trace_line(lp, rad, arena, lt.anchor_step[lt.chosen]);
    sl.lambda_tag = lt.invariant_tag;
    if (sl.lambda_tag == -1) {
        const int m = (int)lt.transversals.size();
        std::vector<char> tried(lp.tag_count, 0);
        for (const LineStep& s : chosen_trace.steps) {
            int p = perp_tag_at(rad, arena, s, true);
            if (p == -1 || lt.is_transversal[p]) continue;
            SURFHOM_CHECK(!tried[p], "line crosses the chosen line twice");
            tried[p] = 1;
            const Quad& q = rad.quads[s.ahead.quad];
            int a = s.ahead.pos;
            LineStep fwd = make_step(arena, s.y, arena.next(s.y, q.ids[(a + 1) % 4]),
                                     q.ids[(a + 1) % 4],
                                     rad.other_copy(SideCopy{s.ahead.quad, (a + 1) % 4}));
            LineStep bwd = make_step(arena, s.x, arena.next(s.x, q.ids[(a + 3) % 4]),
                                     q.ids[(a + 3) % 4],
                                     rad.other_copy(SideCopy{s.ahead.quad, (a + 3) % 4}));
            int end_f = -1, end_b = -1;
            if (!lambda_ray(rad, arena, lt, fwd, m, end_f) ||
                !lambda_ray(rad, arena, lt, bwd, m, end_b) || end_f == end_b)
                continue;
            SURFHOM_CHECK(sl.lambda_tag == -1, "two invariant lines cut the belt");
            sl.lambda_tag = p;
            sl.lambda_edge = LiftEdge{fwd.x, fwd.y, fwd.edge};
            sl.lambda_ahead = fwd.ahead;
        }
    }

    auto allowed = [&](uint32_t v, uint32_t w, int t) {
        return (lt.is_transversal[t] || t == sl.lambda_tag) && kept_band_pair(sl, v, w);
    };
    sl.comp.assign(count, -1);
    int comps = 0;
    for (uint32_t v0 = 0; v0 < count; ++v0) {
        if (sl.comp[v0] != -1) continue;
        sl.comp[v0] = comps;
        queue.clear();
        queue.push_back(v0);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            uint32_t v = queue[qi];
            int deg = arena.degree(v);
            for (int s = 0; s < deg; ++s) {
                uint32_t w = arena.slot_nbr(v, s);
                if (sl.comp[w] != -1) continue;
                if (!allowed(v, w, tag_of(arena, v, arena.slot_edge(v, s)))) continue;
                sl.comp[w] = comps;
                queue.push_back(w);
            }
        }
        ++comps;
    }

    // The belt component is the one holding a chosen-line edge together with
    // its translate; candidates are read off the two traces in lockstep.
    SURFHOM_CHECK(lt.anchor_step[lt.family[3]] != -1, "translate of the chosen line unanchored");
    const TracedLine& a = chosen_trace;
    TracedLine b = trace_line(lp, rad, arena, lt.anchor_step[lt.family[3]]);
    int lo = -std::min(a.anchor, b.anchor);
    int hi = std::min((int)a.steps.size() - a.anchor, (int)b.steps.size() - b.anchor);
    int sigma = -1;
    for (int d = lo; d < hi; ++d) {
        const LineStep& ea = a.steps[a.anchor + d];
        const LineStep& eb = b.steps[b.anchor + d];
        if (!kept_band_pair(sl, ea.x, ea.y) || !kept_band_pair(sl, eb.x, eb.y)) continue;
        if (sl.comp[ea.x] != sl.comp[eb.x]) continue;
        SURFHOM_CHECK(sigma == -1 || sigma == sl.comp[ea.x], "two belt components");
        sigma = sl.comp[ea.x];
    }
    SURFHOM_CHECK(sigma != -1, "no component joins the chosen line to its translate");
    sl.component = sigma;

    for (uint32_t v = 0; v < count; ++v) {
        if (sl.comp[v] != sigma) continue;
        int deg = arena.degree(v);
        for (int s = 0; s < deg; ++s) {
            uint32_t w = arena.slot_nbr(v, s);
            if (w < v || sl.comp[w] != sigma) continue;
            int e = arena.slot_edge(v, s);
            if (!allowed(v, w, tag_of(arena, v, e))) continue;
            sl.belt.push_back(LiftEdge{v, w, e});
        }
    }
    return sl;
}

CanonicalCycle canonical_generator(const LiftedPower& lp, const LineTables& lt, const Slice& sl,
                                   const RadialGraph& rad, const LiftArena& arena,
                                   BeltStats* stats) {
    const int m = (int)lt.transversals.size();
    const int skip = lt.family[3];

    std::vector<int> belt_count(lp.tag_count, 0);
    for (const LiftEdge& e : sl.belt) belt_count[tag_of(arena, e.tail, e.edge)]++;

    auto in_belt = [&](const LineStep& s) {
        return sl.comp[s.x] == sl.component && sl.comp[s.y] == sl.component &&
               kept_band_pair(sl, s.x, s.y);
    };

    // Piece of a line inside the belt: a contiguous run of its trace.
    struct Piece {
        int tag = -1;
        int len = 0;
        LineStep first, last;
    };
    Piece ell, skp, lam;
    std::vector<Piece> interior;
    int ell_lo = -1, ell_hi = -1, ell_n = 0;
    long long sum_len = 0, sum_internal = 0;
    for (int t = 0; t < lp.tag_count; ++t) {
        if (belt_count[t] == 0) continue;
        SURFHOM_CHECK(lt.is_transversal[t] || t == sl.lambda_tag,
                      "belt edge on an uncrossable line");
        TracedLine tl;
        if (lt.anchor_step[t] != -1) {
            tl = trace_line(lp, rad, arena, lt.anchor_step[t]);
        } else {
            SURFHOM_CHECK(t == sl.lambda_tag, "belt line unanchored");
            tl = trace_from(rad, arena, make_step(arena, sl.lambda_edge.tail, sl.lambda_edge.head,
                                                  sl.lambda_edge.edge, sl.lambda_ahead));
        }
        int lo = -1, hi = -1;
        for (int i = 0; i < (int)tl.steps.size(); ++i) {
            if (!in_belt(tl.steps[i])) continue;
            if (lo == -1) lo = i;
            SURFHOM_CHECK(hi == -1 || hi == i - 1, "belt piece not contiguous");
            hi = i;
        }
        SURFHOM_CHECK(lo != -1 && hi - lo + 1 == belt_count[t], "belt piece miscounted");
        Piece p{t, hi - lo + 1, tl.steps[lo], tl.steps[hi]};
        if (t == skip) {
            skp = p;  // translate copy of the chosen piece, dropped from counts
            continue;
        }
        sum_len += p.len;
        sum_internal += p.len - 1;
        if (t == lt.chosen) {
            ell = p;
            ell_lo = lo;
            ell_hi = hi;
            ell_n = (int)tl.steps.size();
        } else if (t == sl.lambda_tag) {
            lam = p;
        } else {
            interior.push_back(p);
        }
    }
    SURFHOM_CHECK(ell.tag == lt.chosen, "chosen line missing from the belt");
    SURFHOM_CHECK(skp.tag == skip && skp.len == ell.len, "belt seams asymmetric");
    SURFHOM_CHECK(sl.lambda_tag == -1 || lt.invariant_tag != -1 || lam.tag == sl.lambda_tag,
                  "invariant line missing from the belt");

    long long s_ell = ell.len - 1;
    SURFHOM_CHECK((sum_internal - s_ell) % 2 == 0, "belt junctions unpaired");
    long long v_int = (sum_internal - s_ell) / 2 + s_ell;
    long long e_int = sum_len;
    SURFHOM_CHECK(e_int == 2 * v_int + m, "belt size off its degree count");

    BeltStats bs;
    bs.transversals = m;
    bs.interior_edges = e_int;
    bs.interior_vertices = v_int;
    bs.side = BeltSide::whole;
    if (sl.lambda_tag != -1 && lt.invariant_tag == -1) {
        // The walk never crosses the invariant line; the chosen trace is cut
        // short on whichever side of it the region excludes.
        if (ell_hi == ell_n - 1 && ell_lo > 0)
            bs.side = BeltSide::left_half;
        else if (ell_lo == 0 && ell_hi < ell_n - 1)
            bs.side = BeltSide::right_half;
    }

    // Rightmost edge of each piece, unless its far endpoint is a crossing
    // with another transversal or the invariant line; such a piece re-enters
    // the belt as a translate and is emitted there instead.
    std::vector<LiftEdge> period;
    std::vector<CanonicalToken> raw;
    period.reserve(m);
    raw.reserve(m);
    auto add = [&](const Piece& p) {
        int perp = perp_tag_at(rad, arena, p.last, false);
        if (perp != -1 && (lt.is_transversal[perp] || perp == sl.lambda_tag)) return;
        period.push_back(oriented_crossing(rad, arena, p.last));
        raw.push_back(
            CanonicalToken{period.back().edge, arena.type_of(period.back().tail) == kTypeS});
    };
    add(ell);
    SURFHOM_CHECK(!period.empty(), "chosen line yields no generator edge");
    for (const Piece& p : interior) add(p);
    SURFHOM_CHECK((int)period.size() == m, "generator edge count mismatch");

    // Chain the period tail to head; it closes on the dropped translate copy.
    LiftEdge close = oriented_crossing(rad, arena, skp.last);
    SURFHOM_CHECK(sl.band[period[0].tail] == -1 && sl.band[period[0].head] == 0,
                  "chosen crossing not oriented forward");
    std::vector<int> by_tail((size_t)arena.vertex_count(), -1);
    for (int i = 0; i < (int)period.size(); ++i) {
        SURFHOM_CHECK(by_tail[period[i].tail] == -1, "generator repeats a vertex");
        by_tail[period[i].tail] = i;
    }
    CanonicalCycle out;
    out.tokens.reserve(m);
    int cur = 0;
    by_tail[period[0].tail] = -1;
    for (int i = 0; i < m; ++i) {
        out.tokens.push_back(raw[cur]);
        uint32_t h = period[cur].head;
        if (i + 1 == m) {
            SURFHOM_CHECK(h == close.tail, "generator period does not close");
        } else {
            cur = by_tail[h];
            SURFHOM_CHECK(cur != -1, "generator chain breaks");
            by_tail[h] = -1;
        }
    }
    SURFHOM_CHECK(m >= 2 && m % 2 == 0, "generator length must be even");
    for (int i = 0; i < m; ++i)
        SURFHOM_CHECK(out.tokens[i].up != out.tokens[(i + 1) % m].up,
                      "generator does not alternate");
    if (stats) *stats = bs;
    return out;
}

CanonicalCycle canonical_cycle(const RadialWalk& c, const RadialGraph& rad, LiftArena& arena,
                               BeltStats* stats, RegionStats* rstats) {
    LiftedPower lp = lift_power(c, rad, arena, rstats);
    LineTables lt = classify_lines(lp, rad, arena);
    Slice sl = extract_belt(lp, lt, rad, arena);
    return canonical_generator(lp, lt, sl, rad, arena, stats);
}

bool cyclic_equal(const CanonicalCycle& a, const CanonicalCycle& b) {
    const size_t n = a.tokens.size();
    if (n != b.tokens.size()) return false;
    if (n == 0) return true;
    const std::vector<CanonicalToken>& pat = a.tokens;
    std::vector<size_t> pi(n, 0);
    for (size_t i = 1; i < n; ++i) {
        size_t k = pi[i - 1];
        while (k > 0 && !(pat[i] == pat[k])) k = pi[k - 1];
        if (pat[i] == pat[k]) ++k;
        pi[i] = k;
    }
    size_t k = 0;
    for (size_t i = 0; i < 2 * n; ++i) {
        const CanonicalToken& t = b.tokens[i % n];
        while (k > 0 && !(t == pat[k])) k = pi[k - 1];
        if (t == pat[k]) ++k;
        if (k == n) return true;
    }
    return false;
}

std::vector<CanonicalToken> least_rotation(const std::vector<CanonicalToken>& tokens) {
    const size_t n = tokens.size();
    if (n == 0) return {};
    auto key = [&](size_t i) {
        const CanonicalToken& t = tokens[i % n];
        return std::pair<int, int>(t.edge, t.up);
    };
    size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        auto a = key(i + k), b = key(j + k);
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    size_t s = std::min(i, j);
    std::vector<CanonicalToken> out;
    out.reserve(n);
    for (size_t t = 0; t < n; ++t) out.push_back(tokens[(s + t) % n]);
    return out;
}

RadialWalk cycle_to_walk(const CanonicalCycle& c) {
    const size_t n = c.tokens.size();
    SURFHOM_CHECK(n >= 2 && n % 2 == 0, "cycle length must be even");
    size_t s = c.tokens[0].up ? 0 : 1;
    RadialWalk w(n);
    for (size_t i = 0; i < n; ++i) {
        const CanonicalToken& t = c.tokens[(s + i) % n];
        SURFHOM_CHECK(t.up == (i % 2 == 0), "cycle does not alternate");
        w[i] = t.edge;
    }
    return w;
}

}  // namespace surfhom
