#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "surfhom/word.hpp"

namespace surfhom {

// Edge e has darts 2e (forward) and 2e+1 (backward).
inline int opposite(int d) { return d ^ 1; }
inline int edge_of(int d) { return d >> 1; }
inline Letter letter_of(int d) { return (d & 1) ? -(edge_of(d) + 1) : edge_of(d) + 1; }
inline int dart_of(Letter x) { return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1; }

struct SurfaceClass {
    int chi = 2;
    int genus = 0;
    bool orientable = true;
    int faces = 1;
};

// Rotation system plus edge signature. rot_next is the counterclockwise
// dart order around the tail vertex (in the vertex's local orientation);
// twist[e] = 1 glues e reversing orientation.
struct Embedding {
    std::string name;
    int V = 0;
    int E = 0;
    std::vector<int> rot_next, rot_prev;  // per dart
    std::vector<int> vertex_of;           // tail vertex per dart
    std::vector<uint8_t> twist;           // per edge

    int darts() const { return 2 * E; }
    int head_of(int d) const { return vertex_of[opposite(d)]; }

    // Face traversal runs on states (dart, side), id = 2*dart + side.
    int state_next(int st) const {
        int d = st >> 1, s = st & 1;
        int s2 = s ^ twist[edge_of(d)];
        int nd = s2 == 0 ? rot_next[opposite(d)] : rot_prev[opposite(d)];
        return 2 * nd + s2;
    }
};

// throws Error on structural defects
void validate(const Embedding& emb);

struct Faces {
    int count = 0;                   // geometric faces (orbit pairs)
    std::vector<int> face_of_state;  // per state, empty when E == 0
    std::vector<int> walk_start;     // canonical start state per face
    std::vector<int> orbit_of_state;
    std::vector<int> orbit_start;    // first state seen per orbit
};

Faces compute_faces(const Embedding& emb);

// dart sequence of the face's canonical traversal
std::vector<int> face_walk_states(const Embedding& emb, int start_state);

SurfaceClass classify_surface(const Embedding& emb);

// Flips vertex orientations to clear every twist; returns false (and
// leaves the embedding untouched) when the signature is unbalanced,
// i.e. the surface is non-orientable.
bool normalize_orientation(Embedding& emb);

// One-vertex embedding whose single face spells w; rejects words that
// are not realizable as a one-face gluing.
Embedding wedge_from_word(const Word& w, const std::string& name = "wedge");

Embedding gen_canonical(int genus, bool orientable);

// Dual keeps primal edge ids. On a normalized orientable embedding the
// dual dart with a primal dart's id runs from its left face to its
// right face; left_face/right_face record that per primal dart.
struct DualEmbedding {
    Embedding graph;  // vertices = primal faces
    std::vector<int> left_face;
    std::vector<int> right_face;
};

DualEmbedding dual(const Embedding& emb);

Embedding parse_embedding(std::istream& in);
Embedding parse_embedding_file(const std::string& path);
std::string serialize_embedding(const Embedding& emb);

// Walks are edge words: letter +-k means edge k-1, forward/backward.
std::vector<int> walk_from_word(const Embedding& emb, const Word& w);  // darts
void check_closed_walk(const Embedding& emb, const std::vector<int>& walk);

}  // namespace surfhom
