#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "surfhom/reduction.hpp"

namespace surfhom {

// Bipartite graph on {s, t} with one edge per polygon corner: edge k
// sits at the corner before polygon side k. Up-darts run s -> t.
// Gluing the polygon's triangles in pairs tiles the surface with
// quadrilaterals, one per A-edge; their boundary alternates
// down/up/down/up, so corners at even positions are t-corners.
struct Quad {
    std::array<int, 4> ids;    // radial edge ids along the boundary
    std::array<int, 2> ranks;  // fg occurrence ranks, increasing
    bool twisted = false;
};

struct SideCopy {
    int quad = -1;
    int pos = -1;
};

inline bool operator==(const SideCopy& a, const SideCopy& b) {
    return a.quad == b.quad && a.pos == b.pos;
}

struct RadialGraph {
    int r = 0;
    std::vector<Quad> quads;                       // r/2
    std::vector<std::array<SideCopy, 2>> sides;    // the two boundary copies per edge
    std::vector<int> quad_of_rank;                 // polygon side -> its quad
    std::vector<int> mate_rank;                    // other occurrence of the same A-edge
    Word fg_word;                                  // copied from the cut graph

    // rotation system, orientable surfaces only
    bool oriented = false;
    std::vector<int> sigma;      // rotation at s: after up_k comes up_sigma[k]
    std::vector<int> sigma_inv;
    // side copies seen from a traversal of the edge; right_of_up[k] is
    // the copy inside the quad whose facial orbit traverses up_k
    std::vector<SideCopy> right_of_up, left_of_up, right_of_down, left_of_down;

    int right_quad_of_up(int k) const { return quad_of_rank[(k + r - 1) % r]; }
    int right_quad_of_down(int k) const { return quad_of_rank[k]; }
    SideCopy other_copy(const SideCopy& c) const {
        const auto& pair = sides[quads[c.quad].ids[c.pos]];
        return pair[0] == c ? pair[1] : pair[0];
    }
};

RadialGraph build_radial(const CutGraph& cg, bool orientable);

// Edge ids; even index = up step. A term (u, v) becomes the 2-step
// excursion up edge u, down edge v+1.
using RadialWalk = std::vector<int>;

RadialWalk terms_to_radial_walk(const TermProduct& tp, const RadialGraph& rad);

// Reads each up/down excursion back as polygon letters; the pair
// (u, u) is read as a backtrack, i.e. the empty word.
Word radial_to_word(const RadialWalk& walk, const RadialGraph& rad);

}  // namespace surfhom
