#include "surfhom/radial.hpp"

#include <cstdlib>

#include "surfhom/error.hpp"

namespace surfhom {

RadialGraph build_radial(const CutGraph& cg, bool orientable) {
    RadialGraph rad;
    rad.r = cg.r();
    rad.fg_word = cg.fg_word;
    const int r = rad.r;
    if (r == 0) return rad;

    rad.quad_of_rank.assign(r, -1);
    rad.mate_rank.assign(r, -1);
    std::vector<std::array<int, 2>> occ(r / 2, {-1, -1});
    for (int k = 0; k < r; ++k) {
        int a = std::abs(cg.fg_word[k]) - 1;
        SURFHOM_CHECK(a < r / 2, "polygon letter out of range");
        (occ[a][0] == -1 ? occ[a][0] : occ[a][1]) = k;
    }
    rad.sides.assign(r, {SideCopy{}, SideCopy{}});
    std::vector<int> copies_seen(r, 0);
    for (int a = 0; a < r / 2; ++a) {
        int i = occ[a][0], j = occ[a][1];
        SURFHOM_CHECK(i >= 0 && j > i, "polygon letter must occur exactly twice");
        Quad q;
        q.ranks = {i, j};
        q.twisted = cg.fg_dart[i] == cg.fg_dart[j];
        SURFHOM_CHECK(q.twisted || cg.fg_dart[j] == opposite(cg.fg_dart[i]),
                      "polygon occurrences disagree on the underlying edge");
        if (q.twisted)
            q.ids = {i, j, (j + 1) % r, (i + 1) % r};
        else
            q.ids = {i, (j + 1) % r, j, (i + 1) % r};
        int qi = (int)rad.quads.size();
        rad.quads.push_back(q);
        rad.quad_of_rank[i] = rad.quad_of_rank[j] = qi;
        rad.mate_rank[i] = j;
        rad.mate_rank[j] = i;
        for (int pos = 0; pos < 4; ++pos) {
            int e = q.ids[pos];
            SURFHOM_CHECK(copies_seen[e] < 2, "radial edge has more than two side copies");
            rad.sides[e][copies_seen[e]++] = {qi, pos};
        }
    }
    for (int e = 0; e < r; ++e)
        SURFHOM_CHECK(copies_seen[e] == 2, "radial edge missing a side copy");

    if (!orientable) return rad;
    rad.oriented = true;

    std::vector<int> rank_of_dart(4 * (r / 2), -1);
    for (int k = 0; k < r; ++k) {
        SURFHOM_CHECK(!rad.quads[rad.quad_of_rank[k]].twisted,
                      "twisted polygon side on an orientable surface");
        SURFHOM_CHECK(rank_of_dart[cg.fg_dart[k]] == -1, "duplicate dart in orientable polygon");
        rank_of_dart[cg.fg_dart[k]] = k;
    }
    rad.sigma.assign(r, -1);
    rad.sigma_inv.assign(r, -1);
    for (int k = 0; k < r; ++k) {
        int mate = rank_of_dart[opposite(cg.fg_dart[k])];
        SURFHOM_CHECK(mate >= 0, "polygon misses a dart's opposite");
        rad.sigma[k] = (mate + 1) % r;
    }
    int cur = 0, steps = 0;
    do {
        SURFHOM_CHECK(rad.sigma_inv[rad.sigma[cur]] == -1, "corner rotation not a permutation");
        rad.sigma_inv[rad.sigma[cur]] = cur;
        cur = rad.sigma[cur];
        ++steps;
    } while (cur != 0);
    SURFHOM_CHECK(steps == r, "corner rotation is not a single cycle");

    // facial orbits of the radial embedding must be exactly the quads
    for (const Quad& q : rad.quads) {
        SURFHOM_CHECK(rad.sigma[q.ids[0]] == q.ids[1], "quad disagrees with radial rotation");
        SURFHOM_CHECK((q.ids[1] + r - 1) % r == q.ids[2], "quad disagrees with radial rotation");
        SURFHOM_CHECK(rad.sigma[q.ids[2]] == q.ids[3], "quad disagrees with radial rotation");
        SURFHOM_CHECK((q.ids[3] + r - 1) % r == q.ids[0], "quad disagrees with radial rotation");
    }

    rad.right_of_up.assign(r, SideCopy{});
    rad.left_of_up.assign(r, SideCopy{});
    rad.right_of_down.assign(r, SideCopy{});
    rad.left_of_down.assign(r, SideCopy{});
    for (int e = 0; e < r; ++e) {
        SideCopy even_copy, odd_copy;
        for (const SideCopy& c : rad.sides[e]) ((c.pos & 1) ? odd_copy : even_copy) = c;
        SURFHOM_CHECK(even_copy.quad >= 0 && odd_copy.quad >= 0,
                      "edge needs one even and one odd side copy");
        SURFHOM_CHECK(even_copy.quad == rad.right_quad_of_down(e) &&
                          odd_copy.quad == rad.right_quad_of_up(e),
                      "side copies disagree with neighboring quads");
        rad.right_of_down[e] = even_copy;
        rad.left_of_up[e] = even_copy;
        rad.right_of_up[e] = odd_copy;
        rad.left_of_down[e] = odd_copy;
    }
    return rad;
}

RadialWalk terms_to_radial_walk(const TermProduct& tp, const RadialGraph& rad) {
    SURFHOM_CHECK(rad.r > 0 || tp.empty(), "terms on an empty polygon");
    RadialWalk w;
    w.reserve(2 * tp.size());
    for (const Term& t : tp) {
        SURFHOM_CHECK(t.lo >= 0 && t.lo < rad.r && t.hi >= 0 && t.hi < rad.r,
                      "term rank out of range");
        w.push_back(t.lo);
        w.push_back((t.hi + 1) % rad.r);
    }
    return w;
}

Word radial_to_word(const RadialWalk& walk, const RadialGraph& rad) {
    SURFHOM_CHECK(walk.size() % 2 == 0, "radial walk must alternate up and down steps");
    Word out;
    for (size_t i = 0; i < walk.size(); i += 2) {
        int u = walk[i], w = walk[i + 1];
        SURFHOM_CHECK(u >= 0 && u < rad.r && w >= 0 && w < rad.r, "radial edge out of range");
        for (int k = u; k != w; k = (k + 1) % rad.r) out.push_back(rad.fg_word[k]);
    }
    return out;
}

}  // namespace surfhom
