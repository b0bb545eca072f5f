#include "surfhom/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

namespace surfhom {

Presentation canonical_presentation(int genus, bool orientable) {
    SURFHOM_CHECK(genus >= 0, "genus must be nonnegative");
    SURFHOM_CHECK(orientable || genus >= 1, "non-orientable genus starts at 1");
    Presentation p;
    p.genus = genus;
    p.orientable = orientable;
    if (orientable) {
        for (int i = 0; i < genus; i++) {
            Letter a = 2 * i + 1, b = 2 * i + 2;
            p.relator.insert(p.relator.end(), {a, b, -a, -b});
        }
    } else {
        for (int i = 1; i <= genus; i++) p.relator.insert(p.relator.end(), {i, i});
    }
    return p;
}

Word free_reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (Letter x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word cyclic_reduce(Word w) {
    w = free_reduce(std::move(w));
    size_t i = 0, j = w.size();
    while (j > i + 1 && w[i] == -w[j - 1]) i++, j--;
    return Word(w.begin() + i, w.begin() + j);
}

bool dehn_applicable(const Presentation& p) {
    if (p.genus == 0) return false;
    return p.orientable ? p.genus >= 2 : p.genus >= 4;
}

namespace {

struct FactorTable {
    int h;  // half the relator length, plus one
    std::vector<Word> rots;  // every cyclic rotation of r and r^-1

    explicit FactorTable(const Word& r) {
        int n = (int)r.size();
        h = n / 2 + 1;
        Word ri = inv(r);
        for (int s = 0; s < n; s++) {
            Word a(n), b(n);
            for (int k = 0; k < n; k++) {
                a[k] = r[(s + k) % n];
                b[k] = ri[(s + k) % n];
            }
            rots.push_back(a);
            rots.push_back(b);
        }
    }

    // If w[i..i+h) is the length-h prefix of some rotation, return the
    // inverse of that rotation's complementary factor.
    std::optional<Word> complement(const Word& w, size_t i) const {
        if (i + h > w.size()) return std::nullopt;
        for (const Word& rot : rots) {
            if (std::equal(rot.begin(), rot.begin() + h, w.begin() + i)) {
                Word tail(rot.begin() + h, rot.end());
                return inv(tail);
            }
        }
        return std::nullopt;
    }
};

}  // namespace

bool dehn_trivial(Word w, const Presentation& p) {
    SURFHOM_CHECK(dehn_applicable(p), "Dehn oracle outside its C'(1/6) regime");
    FactorTable ft(p.relator);
    for (;;) {
        w = free_reduce(std::move(w));
        if (w.empty()) return true;
        bool replaced = false;
        for (size_t i = 0; i + ft.h <= w.size() && !replaced; i++) {
            if (auto rep = ft.complement(w, i)) {
                Word next(w.begin(), w.begin() + i);
                next.insert(next.end(), rep->begin(), rep->end());
                next.insert(next.end(), w.begin() + i + ft.h, w.end());
                w = std::move(next);
                replaced = true;
            }
        }
        if (!replaced) return false;
    }
}

std::vector<long long> abelianize(const Word& w, const Presentation& p) {
    std::vector<long long> v(p.rank(), 0);
    for (Letter x : w) {
        int k = std::abs(x) - 1;
        SURFHOM_CHECK(k < p.rank(), "letter outside presentation rank");
        v[k] += x > 0 ? 1 : -1;
    }
    return v;
}

namespace {

bool enumerate_conjugators(const Word& g, int rank, int left, const Word& w1, const Word& w2,
                           const Presentation& p, Word* found) {
    Word probe = free_reduce(concat(conjugate(g, w1), inv(w2)));
    if (dehn_trivial(probe, p)) {
        *found = g;
        return true;
    }
    if (left == 0) return false;
    for (int k = 1; k <= rank; k++) {
        for (Letter x : {(Letter)k, (Letter)-k}) {
            if (!g.empty() && g.back() == -x) continue;
            Word g2 = g;
            g2.push_back(x);
            if (enumerate_conjugators(g2, rank, left - 1, w1, w2, p, found)) return true;
        }
    }
    return false;
}

}  // namespace

std::optional<Word> brute_conjugate(const Word& w1, const Word& w2, const Presentation& p,
                                    int bound) {
    Word found;
    if (enumerate_conjugators({}, p.rank(), bound, w1, w2, p, &found)) return found;
    return std::nullopt;
}

KleinForm klein_form(const Word& w) {
    // b a = a^-1 b, so a-letters flip sign when pushed past each b.
    KleinForm f;
    for (Letter x : w) {
        SURFHOM_CHECK(x == 1 || x == -1 || x == 2 || x == -2, "Klein form needs letters over a,b");
        if (x == 1 || x == -1)
            f.u += (x > 0 ? 1 : -1) * ((f.v % 2 + 2) % 2 == 0 ? 1 : -1);
        else
            f.v += x > 0 ? 1 : -1;
    }
    return f;
}

bool klein_conjugate(long long u, long long v, long long u2, long long v2) {
    if (v != v2) return false;
    if (((v % 2) + 2) % 2 == 0) return u == u2;
    return ((u - u2) % 2) == 0;
}

KleinForm klein_form_normalize(KleinForm f) {
    if (f.u < 0) f.u = -f.u;
    return f;
}

}  // namespace surfhom
