#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "surfhom/cyclic.hpp"
#include "surfhom/embedding.hpp"
#include "surfhom/lifted_graph.hpp"
#include "surfhom/oracle.hpp"
#include "surfhom/radial.hpp"
#include "surfhom/reduction.hpp"
#include "surfhom/region.hpp"
#include "surfhom/small_surface.hpp"
#include "surfhom/word.hpp"

namespace surfhom {

// Query front end for one surface.  The cut graph, walk index and radial
// tiling are built once and shared read-only by every query; surfaces whose
// polygon has fewer than six sides (sphere, torus, projective plane, Klein
// bottle) are routed to normal-form solvers instead of the tiling engine.
struct SurfaceHomotopy {
    Embedding emb;
    SurfaceClass cls;
    CutGraph cg;
    WalkIndex idx;
    Presentation pres;
    RadialGraph rad;  // polygons with at least six sides only
    std::optional<SmallSolver> small;

    explicit SurfaceHomotopy(Embedding e);

    bool tiled() const { return cg.r() >= 6; }

    LiftArena make_arena(bool with_tags = true) const;

    // The class of a closed dart walk as a word over the polygon alphabet,
    // the form the oracle layer understands.
    Word polygon_word(const std::vector<int>& walk) const;

    bool is_contractible(const std::vector<int>& walk) const;
    bool is_contractible(const std::vector<int>& walk, LiftArena& arena,
                         RegionStats* stats = nullptr) const;

    // Independent answer to the same question, where one exists: Dehn's
    // algorithm on small-cancellation presentations, normal forms on the
    // small surfaces.  Genus-3 non-orientable has neither.
    std::optional<bool> oracle_contractible(const std::vector<int>& walk) const;

    // Homotopy with the basepoint pinned: contractibility of c d^-1.  Both
    // walks must close at a common basepoint.
    bool fixed_homotopic(const std::vector<int>& c, const std::vector<int>& d) const;

    // Free homotopy.  Orientable surfaces and the Klein bottle are decided;
    // two non-contractible walks on a non-orientable surface of genus >= 3
    // raise Error("... unsupported").
    bool free_homotopic(const std::vector<int>& c, const std::vector<int>& d) const;

    // Fingerprint of a non-contractible class; orientable genus >= 2 only.
    CanonicalCycle canonical(const std::vector<int>& walk, LiftArena& arena,
                             BeltStats* stats = nullptr, RegionStats* rstats = nullptr) const;
};

std::vector<int> reverse_walk(const std::vector<int>& walk);

// One row per word length: mean query times on seeded random reduced words,
// normalized per input letter.  Preprocessing is rebuilt and timed per row so
// its independence from the word length is observable.
struct BenchRow {
    int k = 0;
    int trials = 0;
    double setup_ms = 0.0;
    double contract_ms = 0.0;
    double homotopic_ms = 0.0;
    double contract_ns_per_edge = 0.0;
    double homotopic_ns_per_edge = 0.0;
};

std::vector<BenchRow> bench_scaling(int genus, const std::vector<int>& lengths, int trials,
                                    uint64_t seed);

}  // namespace surfhom
