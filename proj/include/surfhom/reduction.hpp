#pragma once

#include <cstdint>
#include <vector>

#include "surfhom/embedding.hpp"
#include "surfhom/oracle.hpp"
#include "surfhom/word.hpp"

namespace surfhom {

// Tree-cotree cut graph H = T ∪ A. Cutting the surface along H leaves
// one disk whose boundary spells fh; the A-positions of fh form the
// reduced polygon word fg (length r = 2|A|, cyclically reduced).
struct CutGraph {
    std::vector<char> in_tree;  // per edge
    std::vector<char> in_cut;   // per edge, tree plus A
    std::vector<int> a_edges;   // A-edge ids, increasing
    std::vector<int> a_index_of_edge;  // -1 off A

    std::vector<int> fh_dart;      // boundary dart per position
    std::vector<uint8_t> fh_side;  // traversal side per position
    std::vector<int> fg_pos;       // fh position per rank
    std::vector<int> fg_dart;      // dart per rank
    Word fg_word;                  // polygon word over the A alphabet

    int r() const { return (int)fg_dart.size(); }
    int positions() const { return (int)fh_dart.size(); }
};

CutGraph build_cut_graph(const Embedding& emb);

// polygon presentation for oracle cross-checks
Presentation presentation_of(const Embedding& emb, const CutGraph& cg);

// Inclusive forward window [lo..hi] of fg ranks; a closed walk is
// encoded as a product of such windows (its homotopy class, up to
// conjugation, is the product of the expanded subwords).
struct Term {
    int lo = 0, hi = 0;
};

inline int term_length(const Term& t, int r) { return (t.hi - t.lo + r) % r + 1; }

using TermProduct = std::vector<Term>;

// Corner index: position i's corner sits between fh positions i and
// i+1. Chord darts record the corners where they leave and re-enter
// the polygon boundary.
struct WalkIndex {
    int m = 0, r = 0;
    std::vector<int> rank_at_pos;  // -1 off A-positions
    std::vector<int> first_a_at;   // cyclically next A-position at or after pos
    std::vector<int> last_a_at;    // cyclically last A-position at or before pos
    std::vector<int> exit_gap, enter_gap;  // per dart, -1 on cut-graph darts
    std::vector<int> rank1_of_dart;        // first fg rank of a dart, -1 if absent
};

WalkIndex build_walk_index(const Embedding& emb, const CutGraph& cg);

TermProduct encode_walk(const std::vector<int>& walk, const Embedding& emb,
                        const CutGraph& cg, const WalkIndex& idx);

Word expand_term(const Term& t, const CutGraph& cg);
Word expand_terms(const TermProduct& tp, const CutGraph& cg);

}  // namespace surfhom
