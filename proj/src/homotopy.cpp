#include "surfhom/homotopy.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "surfhom/error.hpp"

namespace surfhom {

SurfaceHomotopy::SurfaceHomotopy(Embedding e) : emb(std::move(e)) {
    validate(emb);
    cls = classify_surface(emb);
    if (cls.orientable)
        SURFHOM_CHECK(normalize_orientation(emb), "orientable surface failed to normalize");
    cg = build_cut_graph(emb);
    idx = build_walk_index(emb, cg);
    pres = presentation_of(emb, cg);
    if (tiled())
        rad = build_radial(cg, cls.orientable);
    else
        small = build_small_solver(cls, cg);
}

LiftArena SurfaceHomotopy::make_arena(bool with_tags) const {
    return LiftArena(std::max(rad.r, 1), with_tags);
}

Word SurfaceHomotopy::polygon_word(const std::vector<int>& walk) const {
    return expand_terms(encode_walk(walk, emb, cg, idx), cg);
}

bool SurfaceHomotopy::is_contractible(const std::vector<int>& walk) const {
    LiftArena arena = make_arena(false);
    return is_contractible(walk, arena);
}

bool SurfaceHomotopy::is_contractible(const std::vector<int>& walk, LiftArena& arena,
                                      RegionStats* stats) const {
    TermProduct tp = encode_walk(walk, emb, cg, idx);
    if (!tiled()) return small->trivial(expand_terms(tp, cg));
    return lift_closes(terms_to_radial_walk(tp, rad), rad, arena, stats);
}

std::optional<bool> SurfaceHomotopy::oracle_contractible(const std::vector<int>& walk) const {
    Word w = polygon_word(walk);
    if (!tiled()) return small->trivial(w);
    if (dehn_applicable(pres)) return dehn_trivial(w, pres);
    return std::nullopt;
}

bool SurfaceHomotopy::fixed_homotopic(const std::vector<int>& c, const std::vector<int>& d) const {
    std::vector<int> cat = c;
    std::vector<int> rev = reverse_walk(d);
    cat.insert(cat.end(), rev.begin(), rev.end());
    return is_contractible(cat);
}

bool SurfaceHomotopy::free_homotopic(const std::vector<int>& c, const std::vector<int>& d) const {
    if (c == d) return true;
    TermProduct tpc = encode_walk(c, emb, cg, idx);
    TermProduct tpd = encode_walk(d, emb, cg, idx);

    if (!tiled()) {
        Word wc = expand_terms(tpc, cg), wd = expand_terms(tpd, cg);
        if (small->kind != SmallKind::klein) return small->conjugate(wc, wd);
        SmallSolver::Form a = small->klein_form(wc), b = small->klein_form(wd);
        KleinForm fa = klein_form_normalize(KleinForm{a.u, a.v});
        KleinForm fb = klein_form_normalize(KleinForm{b.u, b.v});
        return klein_conjugate(fa.u, fa.v, fb.u, fb.v);
    }

    RadialWalk rc = terms_to_radial_walk(tpc, rad);
    RadialWalk rd = terms_to_radial_walk(tpd, rad);
    bool cc, cd;
    {
        LiftArena scratch = make_arena(false);
        cc = lift_closes(rc, rad, scratch);
        cd = lift_closes(rd, rad, scratch);
    }
    if (cc || cd) return cc == cd;

    SURFHOM_CHECK(cls.orientable,
                  "free homotopy on a non-orientable surface of genus >= 3 is unsupported");

    CanonicalCycle gc, gd;
    {
        LiftArena arena = make_arena(true);
        gc = canonical_cycle(rc, rad, arena);
    }
    {
        LiftArena arena = make_arena(true);
        gd = canonical_cycle(rd, rad, arena);
    }
    return cyclic_equal(gc, gd);
}

CanonicalCycle SurfaceHomotopy::canonical(const std::vector<int>& walk, LiftArena& arena,
                                          BeltStats* stats, RegionStats* rstats) const {
    SURFHOM_CHECK(tiled() && cls.orientable,
                  "canonical cycles need an orientable polygon with at least six sides");
    TermProduct tp = encode_walk(walk, emb, cg, idx);
    return canonical_cycle(terms_to_radial_walk(tp, rad), rad, arena, stats, rstats);
}

std::vector<int> reverse_walk(const std::vector<int>& walk) {
    std::vector<int> rev(walk.rbegin(), walk.rend());
    for (int& d : rev) d = opposite(d);
    return rev;
}

std::vector<BenchRow> bench_scaling(int genus, const std::vector<int>& lengths, int trials,
                                    uint64_t seed) {
    SURFHOM_CHECK(genus >= 2, "scaling bench runs on orientable genus >= 2");
    SURFHOM_CHECK(trials >= 1, "scaling bench needs at least one trial");
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    WordGen gen(seed);
    std::vector<BenchRow> rows;
    for (int k : lengths) {
        SURFHOM_CHECK(k >= 2, "bench word length too small");
        BenchRow row;
        row.k = k;
        row.trials = trials;

        auto t0 = clock::now();
        SurfaceHomotopy sh(gen_canonical(genus, true));
        row.setup_ms = ms_since(t0);

        LiftArena arena = sh.make_arena(false);
        for (int t = 0; t < trials; ++t) {
            Word w = gen.random_reduced(2 * genus, k);
            std::vector<int> walk = walk_from_word(sh.emb, w);
            auto t1 = clock::now();
            bool closed = sh.is_contractible(walk, arena);
            row.contract_ms += ms_since(t1);
            (void)closed;

            Word g = gen.random_reduced(2 * genus, 4);
            std::vector<int> walk2 = walk_from_word(sh.emb, conjugate(g, w));
            auto t2 = clock::now();
            bool same = sh.free_homotopic(walk, walk2);
            row.homotopic_ms += ms_since(t2);
            (void)same;
        }
        row.contract_ms /= trials;
        row.homotopic_ms /= trials;
        row.contract_ns_per_edge = row.contract_ms * 1e6 / k;
        row.homotopic_ns_per_edge = row.homotopic_ms * 1e6 / k;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace surfhom
