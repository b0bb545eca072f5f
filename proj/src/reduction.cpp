#include "surfhom/reduction.hpp"

#include <algorithm>
#include <vector>

#include "surfhom/error.hpp"

namespace surfhom {

static std::vector<int> first_dart_table(const Embedding& emb) {
    std::vector<int> first(emb.V, -1);
    for (int d = emb.darts() - 1; d >= 0; --d) first[emb.vertex_of[d]] = d;
    return first;
}

CutGraph build_cut_graph(const Embedding& emb) {
    CutGraph cg;
    cg.in_tree.assign(emb.E, 0);
    cg.in_cut.assign(emb.E, 0);
    cg.a_index_of_edge.assign(emb.E, -1);

    std::vector<int> first = first_dart_table(emb);
    std::vector<char> seen(emb.V, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t q = 0; q < queue.size(); ++q) {
        int v = queue[q];
        if (first[v] == -1) continue;
        int cur = first[v];
        do {
            int u = emb.head_of(cur);
            if (!seen[u]) {
                seen[u] = 1;
                cg.in_tree[edge_of(cur)] = 1;
                queue.push_back(u);
            }
            cur = emb.rot_next[cur];
        } while (cur != first[v]);
    }
    SURFHOM_CHECK((int)queue.size() == emb.V, "disconnected graph");

    Faces faces = compute_faces(emb);
    std::vector<char> cotree(emb.E, 0);
    if (emb.E > 0) {
        std::vector<std::vector<std::pair<int, int>>> adj(faces.count);
        for (int e = 0; e < emb.E; ++e) {
            if (cg.in_tree[e]) continue;
            int fa = faces.face_of_state[2 * (2 * e)];
            int fb = faces.face_of_state[2 * (2 * e) + 1];
            adj[fa].push_back({fb, e});
            adj[fb].push_back({fa, e});
        }
        std::vector<char> fseen(faces.count, 0);
        std::vector<int> fqueue{0};
        fseen[0] = 1;
        for (size_t q = 0; q < fqueue.size(); ++q)
            for (auto [g, e] : adj[fqueue[q]])
                if (!fseen[g]) {
                    fseen[g] = 1;
                    cotree[e] = 1;
                    fqueue.push_back(g);
                }
        SURFHOM_CHECK((int)fqueue.size() == faces.count, "dual graph not spanned");
    }

    for (int e = 0; e < emb.E; ++e) {
        if (cg.in_tree[e] || cotree[e]) {
            cg.in_cut[e] = cg.in_tree[e];
            continue;
        }
        cg.a_index_of_edge[e] = (int)cg.a_edges.size();
        cg.a_edges.push_back(e);
        cg.in_cut[e] = 1;
    }
    int chi = emb.V - emb.E + faces.count;
    SURFHOM_CHECK((int)cg.a_edges.size() == 2 - chi, "cut graph has wrong chord count");

    // rotation of the sub-embedding induced on the cut graph
    int cut_darts = 0;
    std::vector<int> rot_next_h(emb.darts(), -1);
    for (int v = 0; v < emb.V; ++v) {
        if (first[v] == -1) continue;
        int anchor = -1, prev = -1, cur = first[v];
        do {
            if (cg.in_cut[edge_of(cur)]) {
                ++cut_darts;
                if (prev == -1)
                    anchor = cur;
                else
                    rot_next_h[prev] = cur;
                prev = cur;
            }
            cur = emb.rot_next[cur];
        } while (cur != first[v]);
        if (prev != -1) rot_next_h[prev] = anchor;
    }

    if (cut_darts > 0) {
        std::vector<int> rot_prev_h(emb.darts(), -1);
        for (int d = 0; d < emb.darts(); ++d)
            if (rot_next_h[d] != -1) rot_prev_h[rot_next_h[d]] = d;
        int d0 = 0;
        while (!cg.in_cut[edge_of(d0)]) ++d0;
        int d = d0, s = 0;
        do {
            cg.fh_dart.push_back(d);
            cg.fh_side.push_back((uint8_t)s);
            s ^= emb.twist[edge_of(d)];
            d = s == 0 ? rot_next_h[opposite(d)] : rot_prev_h[opposite(d)];
        } while (!(d == d0 && s == 0));
        SURFHOM_CHECK((int)cg.fh_dart.size() == cut_darts, "cut graph has more than one face");
    }

    for (int pos = 0; pos < (int)cg.fh_dart.size(); ++pos) {
        int d = cg.fh_dart[pos];
        int a = cg.a_index_of_edge[edge_of(d)];
        if (a < 0) continue;
        cg.fg_pos.push_back(pos);
        cg.fg_dart.push_back(d);
        cg.fg_word.push_back((d & 1) ? -(a + 1) : a + 1);
    }
    SURFHOM_CHECK(cg.r() == 2 * (int)cg.a_edges.size(), "polygon word has wrong length");
    for (int k = 0; k < cg.r(); ++k)
        SURFHOM_CHECK(cg.fg_dart[k] != opposite(cg.fg_dart[(k + 1) % cg.r()]),
                      "polygon word is not cyclically reduced");
    return cg;
}

Presentation presentation_of(const Embedding& emb, const CutGraph& cg) {
    SurfaceClass sc = classify_surface(emb);
    Presentation p;
    p.genus = sc.genus;
    p.orientable = sc.orientable;
    p.relator = cg.fg_word;
    return p;
}

WalkIndex build_walk_index(const Embedding& emb, const CutGraph& cg) {
    WalkIndex idx;
    idx.m = cg.positions();
    idx.r = cg.r();
    idx.rank_at_pos.assign(idx.m, -1);
    for (int k = 0; k < idx.r; ++k) idx.rank_at_pos[cg.fg_pos[k]] = k;

    idx.first_a_at.assign(idx.m, -1);
    idx.last_a_at.assign(idx.m, -1);
    if (idx.r > 0) {
        int nxt = cg.fg_pos.front();
        for (int pass = 0; pass < 2; ++pass)
            for (int pos = idx.m - 1; pos >= 0; --pos) {
                if (idx.rank_at_pos[pos] >= 0) nxt = pos;
                idx.first_a_at[pos] = nxt;
            }
        int prv = cg.fg_pos.back();
        for (int pass = 0; pass < 2; ++pass)
            for (int pos = 0; pos < idx.m; ++pos) {
                if (idx.rank_at_pos[pos] >= 0) prv = pos;
                idx.last_a_at[pos] = prv;
            }
    }

    idx.exit_gap.assign(emb.darts(), -1);
    idx.enter_gap.assign(emb.darts(), -1);
    for (int i = 0; i < idx.m; ++i) {
        int from = opposite(cg.fh_dart[i]);
        int to = cg.fh_dart[(i + 1) % idx.m];
        int side = cg.fh_side[(i + 1) % idx.m];
        int cur = side == 0 ? emb.rot_next[from] : emb.rot_prev[from];
        while (cur != to) {
            SURFHOM_CHECK(!cg.in_cut[edge_of(cur)], "corner sweep hit a cut-graph dart");
            SURFHOM_CHECK(idx.exit_gap[cur] == -1 && idx.enter_gap[opposite(cur)] == -1,
                          "chord dart swept twice");
            idx.exit_gap[cur] = i;
            idx.enter_gap[opposite(cur)] = i;
            cur = side == 0 ? emb.rot_next[cur] : emb.rot_prev[cur];
        }
    }
    for (int d = 0; d < emb.darts(); ++d) {
        if (cg.in_cut[edge_of(d)]) continue;
        if (idx.m == 0) continue;
        SURFHOM_CHECK(idx.exit_gap[d] >= 0 && idx.enter_gap[d] >= 0, "chord dart missed by sweep");
    }

    idx.rank1_of_dart.assign(emb.darts(), -1);
    for (int k = idx.r - 1; k >= 0; --k) idx.rank1_of_dart[cg.fg_dart[k]] = k;
    return idx;
}

TermProduct encode_walk(const std::vector<int>& walk, const Embedding& emb,
                        const CutGraph& cg, const WalkIndex& idx) {
    check_closed_walk(emb, walk);
    TermProduct out;
    const int r = idx.r, m = idx.m;
    if (r == 0) return out;
    for (int d : walk) {
        int e = edge_of(d);
        if (cg.in_cut[e]) {
            if (cg.in_tree[e]) continue;
            int k = idx.rank1_of_dart[d];
            if (k >= 0) {
                out.push_back({k, k});
            } else {
                int u = idx.rank1_of_dart[opposite(d)];
                SURFHOM_CHECK(u >= 0, "chord classified as polygon edge");
                out.push_back({(u + 1) % r, (u - 1 + r) % r});
            }
        } else {
            int i = idx.exit_gap[d], j = idx.enter_gap[d];
            SURFHOM_CHECK(i >= 0 && j >= 0, "chord dart has no corner records");
            int start = (i + 1) % m;
            int to_first = (idx.first_a_at[start] - start + m) % m;
            int to_end = (j - start + m) % m;
            if (to_first > to_end) continue;
            out.push_back({idx.rank_at_pos[idx.first_a_at[start]], idx.rank_at_pos[idx.last_a_at[j]]});
        }
    }
    return out;
}

Word expand_term(const Term& t, const CutGraph& cg) {
    Word w;
    int r = cg.r();
    int len = term_length(t, r);
    for (int k = 0; k < len; ++k) w.push_back(cg.fg_word[(t.lo + k) % r]);
    return w;
}

Word expand_terms(const TermProduct& tp, const CutGraph& cg) {
    Word w;
    for (const Term& t : tp) {
        Word part = expand_term(t, cg);
        w.insert(w.end(), part.begin(), part.end());
    }
    return w;
}

}  // namespace surfhom
