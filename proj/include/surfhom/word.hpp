#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "surfhom/error.hpp"

namespace surfhom {

// A letter is a nonzero signed index: +k is generator (edge) k, -k its
// inverse, k >= 1. Letter 'a' is +1, 'A' is -1.
using Letter = int;
using Word = std::vector<Letter>;

inline Letter inv(Letter x) { return -x; }
Word inv(const Word& w);
Word concat(const Word& a, const Word& b);
Word conjugate(const Word& g, const Word& w);  // g w g^-1
Word power(const Word& w, int n);

// Accepts whitespace-separated tokens. A token is either a signed index
// ("+3", "-7", also bare "3") or a run of letters ("abAB", uppercase =
// inverse). rank > 0 bounds the admissible index.
Word parse_word(const std::string& text, int rank = 0);

// Letters when every index fits in a..z, signed tokens otherwise.
std::string format_word(const Word& w);

struct WordGen {
    std::mt19937_64 rng;

    explicit WordGen(uint64_t seed) : rng(seed) {}

    Letter random_letter(int rank);
    Word random_word(int rank, int len);
    // freely and cyclically reduced
    Word random_reduced(int rank, int len);
};

}  // namespace surfhom
