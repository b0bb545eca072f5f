#include "surfhom/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace surfhom {

Word inv(const Word& w) {
    Word out(w.size());
    for (size_t i = 0; i < w.size(); i++) out[i] = -w[w.size() - 1 - i];
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word conjugate(const Word& g, const Word& w) { return concat(concat(g, w), inv(g)); }

Word power(const Word& w, int n) {
    Word out;
    if (n < 0) return power(inv(w), -n);
    out.reserve(w.size() * n);
    for (int i = 0; i < n; i++) out.insert(out.end(), w.begin(), w.end());
    return out;
}

static void check_index(long v, int rank, const std::string& tok) {
    if (v == 0) fail("word token '" + tok + "': index must be nonzero");
    if (v > 1000000 || v < -1000000) fail("word token '" + tok + "': index out of range");
    if (rank > 0 && (v > rank || v < -rank))
        fail("word token '" + tok + "': index exceeds alphabet of rank " + std::to_string(rank));
}

Word parse_word(const std::string& text, int rank) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        char c0 = tok[0];
        if (c0 == '+' || c0 == '-' || std::isdigit((unsigned char)c0)) {
            size_t pos = 0;
            long v = 0;
            try {
                v = std::stol(tok, &pos);
            } catch (const std::exception&) {
                fail("word token '" + tok + "': not a signed index");
            }
            if (pos != tok.size()) fail("word token '" + tok + "': not a signed index");
            check_index(v, rank, tok);
            w.push_back((Letter)v);
        } else {
            for (char c : tok) {
                long v;
                if (c >= 'a' && c <= 'z')
                    v = c - 'a' + 1;
                else if (c >= 'A' && c <= 'Z')
                    v = -(c - 'A' + 1);
                else
                    fail("word token '" + tok + "': bad letter '" + std::string(1, c) + "'");
                check_index(v, rank, tok);
                w.push_back((Letter)v);
            }
        }
    }
    return w;
}

std::string format_word(const Word& w) {
    bool lettered = true;
    for (Letter x : w)
        if (x > 26 || x < -26) lettered = false;
    std::string out;
    if (lettered) {
        for (Letter x : w) out += x > 0 ? (char)('a' + x - 1) : (char)('A' - x - 1);
        if (out.empty()) out = "(empty)";
    } else {
        for (size_t i = 0; i < w.size(); i++) {
            if (i) out += ' ';
            out += (w[i] > 0 ? "+" : "") + std::to_string(w[i]);
        }
        if (out.empty()) out = "(empty)";
    }
    return out;
}

Letter WordGen::random_letter(int rank) {
    std::uniform_int_distribution<int> d(0, 2 * rank - 1);
    int v = d(rng);
    return v < rank ? v + 1 : -(v - rank + 1);
}

Word WordGen::random_word(int rank, int len) {
    Word w(len);
    for (int i = 0; i < len; i++) w[i] = random_letter(rank);
    return w;
}

Word WordGen::random_reduced(int rank, int len) {
    if (len == 0) return {};
    SURFHOM_CHECK(rank >= 2 || len <= 1, "random_reduced: rank 1 admits no long reduced word");
    Word w;
    w.reserve(len);
    while ((int)w.size() < len) {
        Letter x = random_letter(rank);
        if (!w.empty() && x == -w.back()) continue;
        if (!w.empty() && (int)w.size() == len - 1 && x == -w.front()) continue;
        w.push_back(x);
    }
    return w;
}

}  // namespace surfhom
