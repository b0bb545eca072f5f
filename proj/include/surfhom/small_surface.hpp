#pragma once

#include <array>

#include "surfhom/embedding.hpp"
#include "surfhom/reduction.hpp"
#include "surfhom/word.hpp"

namespace surfhom {

enum class SmallKind { sphere, torus, projective, klein };

// Word and conjugacy problems for the surfaces whose tiling has fewer than six
// sides per face: the sphere, the torus, the projective plane and the Klein
// bottle.  Klein-bottle words are rewritten onto generators x, z with
// z x z^-1 = x^-1, in which every element has a normal form x^u z^v.
struct SmallSolver {
    SmallKind kind;
    std::array<Word, 2> klein_image;  // images of polygon letters +1, +2

    struct Form {
        long long u = 0;
        long long v = 0;
    };
    Form klein_form(const Word& polygon_word) const;

    bool trivial(const Word& polygon_word) const;
    bool conjugate(const Word& w1, const Word& w2) const;
};

SmallSolver build_small_solver(const SurfaceClass& cls, const CutGraph& cg);

}  // namespace surfhom
