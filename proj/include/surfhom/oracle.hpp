#pragma once

#include <optional>
#include <vector>

#include "surfhom/word.hpp"

namespace surfhom {

struct Presentation {
    int genus = 0;
    bool orientable = true;
    Word relator;  // a1 b1 a1^-1 b1^-1 ... or a1 a1 a2 a2 ...

    int rank() const { return orientable ? 2 * genus : genus; }
};

Presentation canonical_presentation(int genus, bool orientable);

Word free_reduce(Word w);
Word cyclic_reduce(Word w);

// Dehn's algorithm is sound under C'(1/6): orientable genus >= 2 or
// non-orientable genus >= 4. Everything else is refused.
bool dehn_applicable(const Presentation& p);
bool dehn_trivial(Word w, const Presentation& p);

std::vector<long long> abelianize(const Word& w, const Presentation& p);

// Searches conjugators g with |g| <= bound; a hit certifies conjugacy,
// a miss certifies nothing.
std::optional<Word> brute_conjugate(const Word& w1, const Word& w2, const Presentation& p,
                                    int bound);

// Canonical form a^u b^v in <a,b ; a b a b^-1> (letters +-1 = a, +-2 = b).
struct KleinForm {
    long long u = 0;
    long long v = 0;
};
KleinForm klein_form(const Word& w);

// The textbook conjugacy rule on canonical forms as given: v = v' and
// either v even and u = u', or v odd and u = u' (mod 2). Stated for forms
// normalized with u >= 0; on raw forms apply klein_form_normalize first,
// since a^u b^v and a^-u b^v are always conjugate (conjugation by b).
bool klein_conjugate(long long u, long long v, long long u2, long long v2);
KleinForm klein_form_normalize(KleinForm f);

}  // namespace surfhom
