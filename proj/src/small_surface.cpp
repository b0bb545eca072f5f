#include "surfhom/small_surface.hpp"

#include <cstdlib>

#include "surfhom/error.hpp"

namespace surfhom {

namespace {

std::array<long long, 2> letter_sums(const Word& w) {
    std::array<long long, 2> s{0, 0};
    for (Letter x : w) {
        int k = std::abs(x) - 1;
        SURFHOM_CHECK(k >= 0 && k < 2, "letter outside the polygon alphabet");
        s[k] += x > 0 ? 1 : -1;
    }
    return s;
}

// Searches the rotations, letter swaps and sign flips of the length-4 gluing
// word for one of the two Klein shapes and returns the letter images in the
// x, z generators.
std::array<Word, 2> klein_change_of_generators(const Word& fg) {
    SURFHOM_CHECK(fg.size() == 4, "Klein gluing word must have four sides");
    const Word shape_a{1, 2, 1, -2};  // already the x z x z^-1 presentation
    const Word shape_b{1, 1, 2, 2};   // x x z z, mapped by x -> x z^-1
    for (int rot = 0; rot < 4; ++rot) {
        for (int swap = 0; swap < 2; ++swap) {
            for (int f1 : {1, -1}) {
                for (int f2 : {1, -1}) {
                    auto rename = [&](Letter x) -> Letter {
                        int idx = std::abs(x);
                        int out = swap ? 3 - idx : idx;
                        int flip = out == 1 ? f1 : f2;
                        return (Letter)((x > 0 ? 1 : -1) * flip * out);
                    };
                    Word t(4);
                    for (int k = 0; k < 4; ++k) t[k] = rename(fg[(rot + k) % 4]);
                    if (t != shape_a && t != shape_b) continue;
                    std::array<Word, 2> image;
                    for (Letter orig : {(Letter)1, (Letter)2}) {
                        Letter re = rename(orig);
                        if (t == shape_b && std::abs(re) == 1)
                            image[orig - 1] = re > 0 ? Word{1, -2} : Word{2, -1};
                        else
                            image[orig - 1] = Word{re};
                    }
                    return image;
                }
            }
        }
    }
    fail("gluing word is not a Klein bottle pattern");
}

}  // namespace

SmallSolver::Form SmallSolver::klein_form(const Word& polygon_word) const {
    SURFHOM_CHECK(kind == SmallKind::klein, "Klein form on a different surface");
    Form f;
    for (Letter x : polygon_word) {
        int k = std::abs(x) - 1;
        SURFHOM_CHECK(k >= 0 && k < 2, "letter outside the polygon alphabet");
        const Word& im = klein_image[k];
        for (size_t i = 0; i < im.size(); ++i) {
            Letter y = x > 0 ? im[i] : (Letter)-im[im.size() - 1 - i];
            int sign = y > 0 ? 1 : -1;
            if (std::abs(y) == 1)
                f.u += ((f.v % 2 + 2) % 2 == 0) ? sign : -sign;
            else
                f.v += sign;
        }
    }
    return f;
}

bool SmallSolver::trivial(const Word& polygon_word) const {
    switch (kind) {
        case SmallKind::sphere:
            return polygon_word.empty();
        case SmallKind::torus: {
            auto s = letter_sums(polygon_word);
            return s[0] == 0 && s[1] == 0;
        }
        case SmallKind::projective: {
            long long s = 0;
            for (Letter x : polygon_word) {
                SURFHOM_CHECK(std::abs(x) == 1, "letter outside the polygon alphabet");
                s += x > 0 ? 1 : -1;
            }
            return s % 2 == 0;
        }
        case SmallKind::klein: {
            Form f = klein_form(polygon_word);
            return f.u == 0 && f.v == 0;
        }
    }
    fail("unreachable");
}

bool SmallSolver::conjugate(const Word& w1, const Word& w2) const {
    switch (kind) {
        case SmallKind::sphere:
            return true;
        case SmallKind::torus: {
            auto s1 = letter_sums(w1), s2 = letter_sums(w2);
            return s1 == s2;
        }
        case SmallKind::projective:
            return trivial(concat(w1, inv(w2)));
        case SmallKind::klein: {
            Form f1 = klein_form(w1), f2 = klein_form(w2);
            long long u1 = std::llabs(f1.u), u2 = std::llabs(f2.u);
            if (f1.v != f2.v) return false;
            if ((f1.v % 2 + 2) % 2 == 0) return u1 == u2;
            return (u1 - u2) % 2 == 0;
        }
    }
    fail("unreachable");
}

SmallSolver build_small_solver(const SurfaceClass& cls, const CutGraph& cg) {
    SmallSolver s;
    if (cls.orientable && cls.genus == 0) {
        SURFHOM_CHECK(cg.r() == 0, "sphere polygon must be empty");
        s.kind = SmallKind::sphere;
    } else if (cls.orientable && cls.genus == 1) {
        SURFHOM_CHECK(cg.r() == 4, "torus polygon must have four sides");
        s.kind = SmallKind::torus;
    } else if (!cls.orientable && cls.genus == 1) {
        SURFHOM_CHECK(cg.r() == 2, "projective polygon must have two sides");
        s.kind = SmallKind::projective;
    } else {
        SURFHOM_CHECK(!cls.orientable && cls.genus == 2, "surface is not small");
        s.kind = SmallKind::klein;
        s.klein_image = klein_change_of_generators(cg.fg_word);
    }
    return s;
}

}  // namespace surfhom
