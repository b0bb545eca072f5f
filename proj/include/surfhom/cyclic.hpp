#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "surfhom/lifted_graph.hpp"
#include "surfhom/radial.hpp"
#include "surfhom/region.hpp"

namespace surfhom {

// Region of the sixth power of a noncontractible radial walk, together with
// the dual lines read off it.  Every edge of the region is tagged with the id
// of the line supporting its dual; tau_of maps a line to its image under the
// deck transformation that shifts the lift by one period, where that image is
// visible through the walk.
struct LiftedPower {
    RadialWalk period;
    int n = 0;                   // steps per period
    std::vector<uint32_t> path;  // 6n + 1 lift vertices
    std::vector<int> step_tag;   // supporting line of each of the 6n steps
    int tag_count = 0;
    std::vector<int> tau_of;   // by tag, -1 when the translate is not visible
    std::vector<int> tau_inv;
};

LiftedPower lift_power(const RadialWalk& c, const RadialGraph& rad, LiftArena& arena,
                       RegionStats* stats = nullptr);

// Per-line crossing data for the marked period (the third copy of the walk,
// running between lift vertices x2 and x3), and the transversals it selects.
struct LineTables {
    std::vector<char> meets_translate;        // line crosses its own translate in the region
    std::vector<std::array<char, 3>> parity;  // crossing parity with periods 2, 3, 4
    std::vector<int> transversals;            // separators of x2|x3, in discovery order
    std::vector<int> anchor_step;             // by tag; crossing step orienting the line
    std::vector<char> is_transversal;         // all visible translates of `transversals`
    std::array<int, 6> family{};              // translates of the chosen line, offsets -2..3
    int chosen = -1;                          // first transversal found along the period
    int invariant_tag = -1;                   // line equal to its own translate, if any
};

LineTables classify_lines(const LiftedPower& lp, const RadialGraph& rad, const LiftArena& arena);

struct LiftEdge {
    uint32_t tail = kNoVertex;
    uint32_t head = kNoVertex;
    int edge = -1;
};

// Slice of the annulus swept by the minimal representatives: the part of the
// region between the chosen line and its translate.  `band` places every lift
// vertex relative to the family of translates (x3 sits in band 0); vertices of
// the strip split into components once the edges of uncrossable lines are
// removed, and `component` names the one joining the chosen line to its
// translate.  `belt` lists that component's edges.  When an invariant line
// stitches the transversals together it is recorded by tag along with a seed
// crossing to retrace it, since the walk itself may never cross it.
struct Slice {
    std::vector<int> band;
    std::vector<int> comp;
    int component = -1;
    std::vector<LiftEdge> belt;
    int lambda_tag = -1;
    LiftEdge lambda_edge;
    SideCopy lambda_ahead;
};

Slice extract_belt(const LiftedPower& lp, const LineTables& lt, const RadialGraph& rad,
                   const LiftArena& arena);

struct CanonicalToken {
    int edge = -1;
    bool up = false;  // traversed from the polygon-side vertex to the face-side vertex
};

inline bool operator==(const CanonicalToken& a, const CanonicalToken& b) {
    return a.edge == b.edge && a.up == b.up;
}

// Projection of the rightmost minimal representative; a cyclic sequence of
// oriented radial edges, canonical for the free homotopy class up to rotation.
struct CanonicalCycle {
    std::vector<CanonicalToken> tokens;
};

// Which side of the belt the region holds: all of it, or only the half ending
// at an invariant line that the walk never crosses.  Informational.
enum class BeltSide { whole, left_half, right_half };

struct BeltStats {
    long long interior_vertices = 0;
    long long interior_edges = 0;
    long long transversals = 0;
    BeltSide side = BeltSide::whole;
};

CanonicalCycle canonical_generator(const LiftedPower& lp, const LineTables& lt, const Slice& sl,
                                   const RadialGraph& rad, const LiftArena& arena,
                                   BeltStats* stats = nullptr);

// Full pipeline on a fresh arena state.  The walk must not be contractible.
CanonicalCycle canonical_cycle(const RadialWalk& c, const RadialGraph& rad, LiftArena& arena,
                               BeltStats* stats = nullptr, RegionStats* rstats = nullptr);

bool cyclic_equal(const CanonicalCycle& a, const CanonicalCycle& b);

std::vector<CanonicalToken> least_rotation(const std::vector<CanonicalToken>& tokens);

// The cycle as a radial walk, rotated to start on an up step.
RadialWalk cycle_to_walk(const CanonicalCycle& c);

}  // namespace surfhom
