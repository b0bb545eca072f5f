#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace surfhom {

inline constexpr uint32_t kNoVertex = UINT32_MAX;

// Growable store for a finite patch of the lifted radial tiling.  Vertices are
// created one at a time; edges carry ids in [0, rank) and attach to a vertex at
// most once.  Lookup tables are allocated without zeroing, so a `rev` entry may
// be stale after reset(); next() therefore round-trips through `index` before
// trusting it.  Per-slot tags are only allocated when requested.
class LiftArena {
public:
    LiftArena(int rank, bool with_tags);

    uint32_t make_vertex(uint8_t type);
    void reset();

    uint32_t vertex_count() const { return count_; }
    int rank() const { return r_; }

    uint8_t type_of(uint32_t v) const;
    int degree(uint32_t v) const;
    int slot_edge(uint32_t v, int slot) const;
    uint32_t slot_nbr(uint32_t v, int slot) const;

    uint32_t next(uint32_t v, int e) const;
    void join(uint32_t v, uint32_t w, int e);

    uint32_t get_tag(uint32_t v, int e) const;
    void set_tag(uint32_t v, int e, uint32_t val);

private:
    struct Chunk {
        std::unique_ptr<uint8_t[]> vtype;
        std::unique_ptr<uint16_t[]> deg;
        std::unique_ptr<uint16_t[]> index;
        std::unique_ptr<uint16_t[]> rev;
        std::unique_ptr<uint32_t[]> nbr;
        std::unique_ptr<uint32_t[]> tag;
    };

    int find_slot(uint32_t v, int e) const;

    int r_;
    bool with_tags_;
    uint32_t vpc_;
    uint32_t shift_;
    uint32_t mask_;
    uint32_t count_ = 0;
    std::vector<Chunk> chunks_;
};

}  // namespace surfhom
