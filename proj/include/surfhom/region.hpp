#pragma once

#include <cstdint>
#include <vector>

#include "surfhom/lifted_graph.hpp"
#include "surfhom/radial.hpp"

namespace surfhom {

struct RegionStats {
    uint64_t faces = 0;
    uint64_t steps = 0;
    uint64_t mirrors = 0;
    double peak_ratio = 0.0;
    bool closed = false;
};

// Lifts a closed radial walk into the tiling's universal cover, growing the
// relevant region on demand.  Returns the walk.size() + 1 lift vertices in
// traversal order.  The arena is reset on entry and left holding the final
// region so it can be inspected afterwards.
std::vector<uint32_t> lift_path(const RadialWalk& walk, const RadialGraph& rad, LiftArena& arena,
                                RegionStats* stats = nullptr);

// Whether the lift comes back to its start vertex, i.e. whether the walk is
// contractible.
bool lift_closes(const RadialWalk& walk, const RadialGraph& rad, LiftArena& arena,
                 RegionStats* stats = nullptr);

struct RegionShape {
    int max_boundary_run = 0;
    int convex_corners = 0;
};

// Scans the region left in the arena by lift_closes.  Boundary runs are the
// longest stretches of rotation-consecutive region-boundary sides of a single
// face; a corner is convex when both of its flanking sides are on the boundary.
RegionShape region_shape(const RadialGraph& rad, const LiftArena& arena);

}  // namespace surfhom
