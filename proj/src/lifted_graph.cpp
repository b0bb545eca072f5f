#include "surfhom/lifted_graph.hpp"

#include <algorithm>

#include "surfhom/error.hpp"

namespace surfhom {

namespace {

uint32_t pow2_at_most(uint32_t x) {
    uint32_t p = 1;
    while (p * 2 <= x) p *= 2;
    return p;
}

}  // namespace

LiftArena::LiftArena(int rank, bool with_tags) : r_(rank), with_tags_(with_tags) {
    SURFHOM_CHECK(rank > 0 && rank < 65535, "tiling rank out of range");
    // aim for chunks of a few MB so small queries stay small
    vpc_ = std::clamp(pow2_at_most((1u << 22) / (uint32_t)(rank * 8)), 64u, 65536u);
    shift_ = 0;
    while ((1u << shift_) != vpc_) ++shift_;
    mask_ = vpc_ - 1;
}

uint32_t LiftArena::make_vertex(uint8_t type) {
    if (count_ == chunks_.size() * (size_t)vpc_) {
        Chunk c;
        c.vtype.reset(new uint8_t[vpc_]);
        c.deg.reset(new uint16_t[vpc_]);
        c.index.reset(new uint16_t[(size_t)vpc_ * r_]);
        c.rev.reset(new uint16_t[(size_t)vpc_ * r_]);
        c.nbr.reset(new uint32_t[(size_t)vpc_ * r_]);
        if (with_tags_) c.tag.reset(new uint32_t[(size_t)vpc_ * r_]);
        chunks_.push_back(std::move(c));
    }
    uint32_t v = count_++;
    Chunk& c = chunks_[v >> shift_];
    c.vtype[v & mask_] = type;
    c.deg[v & mask_] = 0;
    return v;
}

void LiftArena::reset() { count_ = 0; }

uint8_t LiftArena::type_of(uint32_t v) const {
    return chunks_[v >> shift_].vtype[v & mask_];
}

int LiftArena::degree(uint32_t v) const {
    return chunks_[v >> shift_].deg[v & mask_];
}

int LiftArena::slot_edge(uint32_t v, int slot) const {
    return chunks_[v >> shift_].index[(size_t)(v & mask_) * r_ + slot];
}

uint32_t LiftArena::slot_nbr(uint32_t v, int slot) const {
    return chunks_[v >> shift_].nbr[(size_t)(v & mask_) * r_ + slot];
}

int LiftArena::find_slot(uint32_t v, int e) const {
    const Chunk& c = chunks_[v >> shift_];
    size_t base = (size_t)(v & mask_) * r_;
    uint16_t slot = c.rev[base + e];
    if (slot >= c.deg[v & mask_] || c.index[base + slot] != e) return -1;
    return slot;
}

uint32_t LiftArena::next(uint32_t v, int e) const {
    int slot = find_slot(v, e);
    if (slot < 0) return kNoVertex;
    return chunks_[v >> shift_].nbr[(size_t)(v & mask_) * r_ + slot];
}

void LiftArena::join(uint32_t v, uint32_t w, int e) {
    SURFHOM_CHECK(e >= 0 && e < r_, "edge id out of range");
    SURFHOM_CHECK(v < count_ && w < count_ && v != w, "joining an unallocated vertex");
    SURFHOM_CHECK(find_slot(v, e) < 0 && find_slot(w, e) < 0, "edge already attached");
    for (uint32_t u : {v, w}) {
        Chunk& c = chunks_[u >> shift_];
        size_t base = (size_t)(u & mask_) * r_;
        uint16_t slot = c.deg[u & mask_]++;
        SURFHOM_CHECK(slot < r_, "vertex degree exceeds tiling rank");
        c.index[base + slot] = (uint16_t)e;
        c.rev[base + e] = slot;
        c.nbr[base + slot] = (u == v) ? w : v;
        if (with_tags_) c.tag[base + slot] = 0;
    }
}

uint32_t LiftArena::get_tag(uint32_t v, int e) const {
    SURFHOM_CHECK(with_tags_, "arena built without tags");
    int slot = find_slot(v, e);
    SURFHOM_CHECK(slot >= 0, "tag lookup on a missing edge");
    return chunks_[v >> shift_].tag[(size_t)(v & mask_) * r_ + slot];
}

void LiftArena::set_tag(uint32_t v, int e, uint32_t val) {
    SURFHOM_CHECK(with_tags_, "arena built without tags");
    int slot = find_slot(v, e);
    SURFHOM_CHECK(slot >= 0, "tag write on a missing edge");
    chunks_[v >> shift_].tag[(size_t)(v & mask_) * r_ + slot] = val;
}

}  // namespace surfhom
