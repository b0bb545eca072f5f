#include "surfhom/embedding.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

#include "surfhom/error.hpp"

namespace surfhom {

static std::vector<char> reachable_from_zero(const Embedding& emb) {
    std::vector<int> first_dart(emb.V, -1);
    for (int d = emb.darts() - 1; d >= 0; --d) first_dart[emb.vertex_of[d]] = d;
    std::vector<char> reached(emb.V, 0);
    std::vector<int> queue{0};
    reached[0] = 1;
    for (size_t q = 0; q < queue.size(); ++q) {
        int v = queue[q];
        if (first_dart[v] == -1) continue;
        int cur = first_dart[v];
        do {
            int u = emb.head_of(cur);
            if (!reached[u]) {
                reached[u] = 1;
                queue.push_back(u);
            }
            cur = emb.rot_next[cur];
        } while (cur != first_dart[v]);
    }
    return reached;
}

void validate(const Embedding& emb) {
    SURFHOM_CHECK(emb.V >= 1, "embedding needs at least one vertex");
    SURFHOM_CHECK(emb.E >= 0, "negative edge count");
    const int n = emb.darts();
    SURFHOM_CHECK((int)emb.rot_next.size() == n && (int)emb.rot_prev.size() == n &&
                      (int)emb.vertex_of.size() == n && (int)emb.twist.size() == emb.E,
                  "embedding arrays sized inconsistently");
    for (int e = 0; e < emb.E; ++e)
        SURFHOM_CHECK(emb.twist[e] <= 1, "twist flags must be 0 or 1");
    for (int d = 0; d < n; ++d) {
        SURFHOM_CHECK(emb.rot_next[d] >= 0 && emb.rot_next[d] < n, "rotation dart out of range");
        SURFHOM_CHECK(emb.rot_prev[emb.rot_next[d]] == d, "rotation tables are not inverse");
        SURFHOM_CHECK(emb.vertex_of[d] >= 0 && emb.vertex_of[d] < emb.V, "dart vertex out of range");
        SURFHOM_CHECK(emb.vertex_of[emb.rot_next[d]] == emb.vertex_of[d],
                      "rotation cycle crosses vertices");
    }
    std::vector<int> deg(emb.V, 0);
    for (int d = 0; d < n; ++d) ++deg[emb.vertex_of[d]];
    std::vector<char> visited(n, 0);
    for (int d = 0; d < n; ++d) {
        if (visited[d]) continue;
        int len = 0, cur = d;
        do {
            visited[cur] = 1;
            cur = emb.rot_next[cur];
            ++len;
        } while (cur != d);
        SURFHOM_CHECK(len == deg[emb.vertex_of[d]], "vertex rotation splits into several cycles");
    }
    std::vector<char> reached = reachable_from_zero(emb);
    for (int v = 0; v < emb.V; ++v) SURFHOM_CHECK(reached[v], "disconnected graph");
}

// The two traversals of one face are exchanged by this involution; it
// conjugates state_next to its inverse.
static int reversed_state(const Embedding& emb, int st) {
    int d = st >> 1, s = st & 1;
    return 2 * opposite(d) + ((s ^ 1) ^ emb.twist[edge_of(d)]);
}

Faces compute_faces(const Embedding& emb) {
    Faces f;
    const int n_states = 4 * emb.E;
    if (n_states == 0) {
        f.count = 1;
        return f;
    }
    f.orbit_of_state.assign(n_states, -1);
    for (int st = 0; st < n_states; ++st) {
        if (f.orbit_of_state[st] != -1) continue;
        int id = (int)f.orbit_start.size();
        f.orbit_start.push_back(st);
        int cur = st;
        do {
            f.orbit_of_state[cur] = id;
            cur = emb.state_next(cur);
        } while (cur != st);
    }
    const int n_orbits = (int)f.orbit_start.size();
    SURFHOM_CHECK(n_orbits % 2 == 0, "odd face-orbit count");
    std::vector<int> face_of_orbit(n_orbits, -1);
    for (int id = 0; id < n_orbits; ++id) {
        if (face_of_orbit[id] != -1) continue;
        int mate = f.orbit_of_state[reversed_state(emb, f.orbit_start[id])];
        SURFHOM_CHECK(mate != id, "face orbit pairs with itself");
        SURFHOM_CHECK(face_of_orbit[mate] == -1, "face orbit pairing clash");
        face_of_orbit[id] = face_of_orbit[mate] = f.count;
        f.walk_start.push_back(f.orbit_start[id]);
        ++f.count;
    }
    f.face_of_state.assign(n_states, -1);
    for (int st = 0; st < n_states; ++st) f.face_of_state[st] = face_of_orbit[f.orbit_of_state[st]];
    return f;
}

std::vector<int> face_walk_states(const Embedding& emb, int start_state) {
    std::vector<int> walk;
    int cur = start_state;
    do {
        walk.push_back(cur);
        cur = emb.state_next(cur);
    } while (cur != start_state);
    return walk;
}

// 2-colorability of face orbits: the two states of each dart must lie in
// opposite colors, and so must the two states of each arc (a state and its
// reversal). Together these admit exactly the coherent choices of one
// traversal direction per face.
static bool orbits_two_colorable(const Embedding& emb, const Faces& faces) {
    if (emb.E == 0) return true;
    const int n_orbits = (int)faces.orbit_start.size();
    std::vector<std::vector<int>> adj(n_orbits);
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (int d = 0; d < emb.darts(); ++d) {
        link(faces.orbit_of_state[2 * d], faces.orbit_of_state[2 * d + 1]);
        int t = emb.twist[edge_of(d)];
        for (int s = 0; s < 2; ++s)
            link(faces.orbit_of_state[2 * d + s],
                 faces.orbit_of_state[2 * opposite(d) + (s ^ 1 ^ t)]);
    }
    std::vector<int> color(n_orbits, -1);
    for (int root = 0; root < n_orbits; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int o = stack.back();
            stack.pop_back();
            for (int m : adj[o]) {
                if (color[m] == -1) {
                    color[m] = color[o] ^ 1;
                    stack.push_back(m);
                } else if (color[m] == color[o]) {
                    return false;
                }
            }
        }
    }
    return true;
}

SurfaceClass classify_surface(const Embedding& emb) {
    Faces faces = compute_faces(emb);
    SurfaceClass sc;
    sc.faces = faces.count;
    sc.chi = emb.V - emb.E + faces.count;
    sc.orientable = orbits_two_colorable(emb, faces);
    if (sc.orientable) {
        SURFHOM_CHECK((2 - sc.chi) % 2 == 0, "odd Euler deficiency on orientable surface");
        sc.genus = (2 - sc.chi) / 2;
    } else {
        sc.genus = 2 - sc.chi;
        SURFHOM_CHECK(sc.genus >= 1, "non-orientable surface needs positive genus");
    }
    SURFHOM_CHECK(sc.genus >= 0, "negative genus");
    return sc;
}

// sig[v] = 1 on vertices whose rotation must be flipped to clear all
// twists; empty when the signature is unbalanced (non-orientable).
static std::vector<int> balancing_signature(const Embedding& emb) {
    std::vector<int> sig(emb.V, -1);
    sig[0] = 0;
    std::vector<int> queue{0};
    std::vector<std::vector<int>> darts_at(emb.V);
    for (int d = 0; d < emb.darts(); ++d) darts_at[emb.vertex_of[d]].push_back(d);
    for (size_t q = 0; q < queue.size(); ++q) {
        int v = queue[q];
        for (int d : darts_at[v]) {
            int u = emb.head_of(d);
            int want = sig[v] ^ emb.twist[edge_of(d)];
            if (sig[u] == -1) {
                sig[u] = want;
                queue.push_back(u);
            } else if (sig[u] != want) {
                return {};
            }
        }
    }
    return sig;
}

bool normalize_orientation(Embedding& emb) {
    std::vector<int> sig = balancing_signature(emb);
    if (sig.empty()) return false;
    for (int d = 0; d < emb.darts(); ++d)
        if (sig[emb.vertex_of[d]] == 1) std::swap(emb.rot_next[d], emb.rot_prev[d]);
    for (int e = 0; e < emb.E; ++e) {
        emb.twist[e] ^= sig[emb.vertex_of[2 * e]] ^ sig[emb.vertex_of[2 * e + 1]];
        SURFHOM_CHECK(emb.twist[e] == 0, "twist survived orientation normalization");
    }
    return true;
}

Embedding wedge_from_word(const Word& w, const std::string& name) {
    const int n = (int)w.size();
    if (n == 0 || n % 2 != 0) fail("gluing word must have even positive length");
    const int E = n / 2;
    std::vector<std::array<int, 2>> occ(E, {-1, -1});
    for (int i = 0; i < n; ++i) {
        Letter x = w[i];
        int e = (x > 0 ? x : -x) - 1;
        if (x == 0 || e >= E || occ[e][1] != -1)
            fail("gluing word must use each of its edges exactly twice");
        occ[e][occ[e][0] == -1 ? 0 : 1] = i;
    }
    for (int e = 0; e < E; ++e)
        if (occ[e][1] == -1) fail("gluing word must use each of its edges exactly twice");
    std::vector<int> dart(n);
    for (int i = 0; i < n; ++i) dart[i] = dart_of(w[i]);

    // The twists are not read off the sign pattern; they solve a parity system.
    // Between the two visits of an edge the face side flips exactly when both
    // visits use the same dart, and tracks the edge's own twist when they use
    // opposite darts.
    const int blocks = (E + 63) / 64;
    std::vector<std::vector<uint64_t>> rows;
    std::vector<int> rhs;
    for (int e = 0; e < E; ++e) {
        std::vector<uint64_t> row(blocks, 0);
        for (int k = occ[e][0]; k < occ[e][1]; ++k) {
            int f = edge_of(dart[k]);
            row[f >> 6] ^= uint64_t(1) << (f & 63);
        }
        if (w[occ[e][0]] == w[occ[e][1]]) {
            rhs.push_back(1);
        } else {
            row[e >> 6] ^= uint64_t(1) << (e & 63);
            rhs.push_back(0);
        }
        rows.push_back(std::move(row));
    }
    std::vector<int> pivot_row(E, -1);
    for (int i = 0; i < E; ++i) {
        int col = -1;
        for (int c = 0; c < E && col == -1; ++c) {
            if (!(rows[i][c >> 6] >> (c & 63) & 1)) continue;
            if (pivot_row[c] == -1) {
                col = c;
            } else {
                int p = pivot_row[c];
                for (int b = 0; b < blocks; ++b) rows[i][b] ^= rows[p][b];
                rhs[i] ^= rhs[p];
                c = -1;
            }
        }
        if (col == -1) {
            if (rhs[i]) fail("gluing word is not realizable as a one-face wedge");
            continue;
        }
        for (int c = 0; c < E; ++c) {
            int p = pivot_row[c];
            if (p == -1 || !(rows[p][col >> 6] >> (col & 63) & 1)) continue;
            for (int b = 0; b < blocks; ++b) rows[p][b] ^= rows[i][b];
            rhs[p] ^= rhs[i];
        }
        pivot_row[col] = i;
    }
    std::vector<int> free_cols;
    for (int c = 0; c < E; ++c)
        if (pivot_row[c] == -1) free_cols.push_back(c);

    Embedding emb;
    auto attempt = [&](const std::vector<int>& tw) -> bool {
        std::vector<int> side(n + 1, 0);
        for (int i = 0; i < n; ++i) side[i + 1] = side[i] ^ tw[edge_of(dart[i])];
        std::vector<int> nxt(2 * E, -1), claimed(2 * E, 0);
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            int a, b;
            if (side[i + 1] == 0) {
                a = opposite(dart[i]);
                b = dart[j];
            } else {
                a = dart[j];
                b = opposite(dart[i]);
            }
            if ((nxt[a] != -1 && nxt[a] != b) || (nxt[a] == -1 && claimed[b])) return false;
            if (nxt[a] == -1) {
                nxt[a] = b;
                claimed[b] = 1;
            }
        }
        int cycle_len = 0;
        for (int cur = 0; cycle_len == 0 || cur != 0; cur = nxt[cur]) {
            if (cur == -1 || ++cycle_len > 2 * E) return false;
        }
        if (cycle_len != 2 * E) return false;
        emb = Embedding{};
        emb.name = name;
        emb.V = 1;
        emb.E = E;
        emb.twist.assign(tw.begin(), tw.end());
        emb.rot_next = nxt;
        emb.rot_prev.assign(2 * E, -1);
        for (int d = 0; d < 2 * E; ++d) emb.rot_prev[nxt[d]] = d;
        emb.vertex_of.assign(2 * E, 0);
        validate(emb);
        Faces faces = compute_faces(emb);
        SURFHOM_CHECK(faces.count == 1, "wedge construction produced more than one face");
        int st = 2 * dart[0];
        for (int i = 0; i < n; ++i, st = emb.state_next(st))
            SURFHOM_CHECK((st >> 1) == dart[i] && (st & 1) == side[i],
                          "wedge face does not spell the gluing word");
        SURFHOM_CHECK(st == 2 * dart[0], "wedge face does not close up");
        return true;
    };

    std::vector<int> base(E, 0);
    for (int c = 0; c < E; ++c)
        if (pivot_row[c] != -1) base[c] = rhs[pivot_row[c]];
    const int nf = (int)free_cols.size();
    const uint64_t tries = nf >= 10 ? 1 : uint64_t(1) << nf;
    for (uint64_t mask = 0; mask < tries; ++mask) {
        std::vector<int> tw = base;
        for (int k = 0; k < nf; ++k) {
            if (!(mask >> k & 1)) continue;
            int f = free_cols[k];
            tw[f] ^= 1;
            for (int c = 0; c < E; ++c)
                if (pivot_row[c] != -1 && (rows[pivot_row[c]][f >> 6] >> (f & 63) & 1))
                    tw[c] ^= 1;
        }
        if (attempt(tw)) return emb;
    }
    fail("gluing word is not realizable as a one-face wedge");
}

Embedding gen_canonical(int genus, bool orientable) {
    SURFHOM_CHECK(genus >= 0, "negative genus");
    if (!orientable) SURFHOM_CHECK(genus >= 1, "no non-orientable surface of genus 0");
    if (orientable && genus == 0) {
        Embedding emb;
        emb.name = "sphere";
        emb.V = 1;
        emb.E = 0;
        validate(emb);
        return emb;
    }
    Word w;
    if (orientable) {
        for (int i = 0; i < genus; ++i) {
            Letter a = 2 * i + 1, b = 2 * i + 2;
            w.insert(w.end(), {a, b, -a, -b});
        }
    } else {
        for (int i = 1; i <= genus; ++i) w.insert(w.end(), {i, i});
    }
    std::string name = orientable ? "genus" + std::to_string(genus)
                                  : "crosscap" + std::to_string(genus);
    return wedge_from_word(w, name);
}

DualEmbedding dual(const Embedding& emb) {
    Faces faces = compute_faces(emb);
    DualEmbedding du;
    du.graph.name = emb.name.empty() ? "dual" : emb.name + "_dual";
    du.graph.V = faces.count;
    du.graph.E = emb.E;
    const int n = emb.darts();
    du.graph.rot_next.assign(n, -1);
    du.graph.rot_prev.assign(n, -1);
    du.graph.vertex_of.assign(n, -1);
    du.graph.twist.assign(emb.E, 0);
    std::vector<int> visit_dir(n, -1);
    for (int f = 0; f < faces.count; ++f) {
        std::vector<int> walk = face_walk_states(emb, faces.walk_start[f]);
        int first = -1, prev = -1;
        for (int st : walk) {
            int d = st >> 1, s = st & 1;
            int e = edge_of(d);
            bool left_arc = (d & 1) == 0 ? s == 1 : s == emb.twist[e];
            int dd = left_arc ? 2 * e : 2 * e + 1;
            SURFHOM_CHECK(du.graph.vertex_of[dd] == -1, "dual dart claimed twice");
            du.graph.vertex_of[dd] = f;
            visit_dir[dd] = d & 1;
            if (prev != -1) {
                du.graph.rot_next[prev] = dd;
                du.graph.rot_prev[dd] = prev;
            } else {
                first = dd;
            }
            prev = dd;
        }
        du.graph.rot_next[prev] = first;
        du.graph.rot_prev[first] = prev;
    }
    for (int e = 0; e < emb.E; ++e)
        du.graph.twist[e] = visit_dir[2 * e] == visit_dir[2 * e + 1] ? 1 : 0;
    validate(du.graph);
    Faces dual_faces = compute_faces(du.graph);
    SURFHOM_CHECK(dual_faces.count == emb.V, "dual face count differs from primal vertex count");
    du.left_face.assign(n, -1);
    du.right_face.assign(n, -1);
    for (int d = 0; d < n; ++d) {
        du.left_face[d] = du.graph.vertex_of[d];
        du.right_face[d] = du.graph.vertex_of[opposite(d)];
    }
    return du;
}

namespace {

struct FileLine {
    std::string text;
    int number = 0;
};

[[noreturn]] void parse_fail(int lineno, const std::string& msg) {
    fail("line " + std::to_string(lineno) + ": " + msg);
}

std::vector<FileLine> read_lines(std::istream& in) {
    std::vector<FileLine> lines;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        size_t a = raw.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = raw.find_last_not_of(" \t\r");
        lines.push_back({raw.substr(a, b - a + 1), lineno});
    }
    return lines;
}

long long parse_int_token(const std::string& tok, int lineno) {
    size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        parse_fail(lineno, "malformed line: expected integer, got '" + tok + "'");
    }
    if (used != tok.size())
        parse_fail(lineno, "malformed line: expected integer, got '" + tok + "'");
    return v;
}

}  // namespace

Embedding parse_embedding(std::istream& in) {
    std::vector<FileLine> lines = read_lines(in);
    size_t li = 0;
    auto need_line = [&](const char* what) -> const FileLine& {
        if (li >= lines.size())
            parse_fail(lines.empty() ? 1 : lines.back().number, std::string("missing ") + what);
        return lines[li++];
    };

    Embedding emb;
    {
        const FileLine& ln = need_line("'surface' header");
        std::istringstream ss(ln.text);
        std::string kw, name, extra;
        ss >> kw >> name;
        if (kw != "surface" || name.empty() || (ss >> extra))
            parse_fail(ln.number, "malformed line: expected 'surface <name>'");
        emb.name = name;
    }
    {
        const FileLine& ln = need_line("'vertices' header");
        std::istringstream ss(ln.text);
        std::string kw, tok, extra;
        ss >> kw >> tok;
        if (kw != "vertices" || tok.empty() || (ss >> extra))
            parse_fail(ln.number, "malformed line: expected 'vertices <V>'");
        long long v = parse_int_token(tok, ln.number);
        if (v < 1 || v > 100'000'000) parse_fail(ln.number, "vertex count out of range");
        emb.V = (int)v;
    }
    {
        const FileLine& ln = need_line("'edges' header");
        std::istringstream ss(ln.text);
        std::string kw, tok, extra;
        ss >> kw >> tok;
        if (kw != "edges" || tok.empty() || (ss >> extra))
            parse_fail(ln.number, "malformed line: expected 'edges <E>'");
        long long e = parse_int_token(tok, ln.number);
        if (e < 0 || e > 100'000'000) parse_fail(ln.number, "edge count out of range");
        emb.E = (int)e;
    }

    const int n = emb.darts();
    emb.rot_next.assign(n, -1);
    emb.rot_prev.assign(n, -1);
    emb.vertex_of.assign(n, -1);
    emb.twist.assign(emb.E, 0);
    std::vector<int> rot_line_of(emb.V, -1);
    int last_line = lines.empty() ? 1 : lines.back().number;

    for (; li < lines.size(); ++li) {
        const FileLine& ln = lines[li];
        std::istringstream ss(ln.text);
        std::string kw;
        ss >> kw;
        if (kw == "rot") {
            std::string vtok;
            ss >> vtok;
            if (vtok.empty()) parse_fail(ln.number, "malformed line: expected 'rot <v>:'");
            if (vtok.back() == ':') {
                vtok.pop_back();
            } else {
                std::string colon;
                ss >> colon;
                if (colon != ":") parse_fail(ln.number, "malformed line: expected ':' after vertex");
            }
            if (vtok.empty()) parse_fail(ln.number, "malformed line: expected 'rot <v>:'");
            long long v = parse_int_token(vtok, ln.number);
            if (v < 0 || v >= emb.V) parse_fail(ln.number, "vertex index out of range");
            if (rot_line_of[v] != -1)
                parse_fail(ln.number, "duplicate rotation for vertex " + std::to_string(v));
            rot_line_of[v] = ln.number;
            std::vector<int> cyc;
            std::string tok;
            while (ss >> tok) {
                long long d = parse_int_token(tok, ln.number);
                if (d < 0 || d >= n) parse_fail(ln.number, "dart index out of range");
                if (emb.vertex_of[d] != -1) parse_fail(ln.number, "rotation not a permutation");
                emb.vertex_of[d] = (int)v;
                cyc.push_back((int)d);
            }
            for (size_t i = 0; i < cyc.size(); ++i) {
                int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
                emb.rot_next[a] = b;
                emb.rot_prev[b] = a;
            }
        } else if (kw == "twist") {
            std::string tok;
            while (ss >> tok) {
                long long e = parse_int_token(tok, ln.number);
                if (e < 0 || e >= emb.E) parse_fail(ln.number, "edge index out of range");
                if (emb.twist[e]) parse_fail(ln.number, "duplicate twist for edge " + std::to_string(e));
                emb.twist[e] = 1;
            }
        } else {
            parse_fail(ln.number, "malformed line: unknown directive '" + kw + "'");
        }
    }

    for (int v = 0; v < emb.V; ++v)
        if (rot_line_of[v] == -1)
            parse_fail(last_line, "missing rotation for vertex " + std::to_string(v));
    for (int d = 0; d < n; ++d)
        if (emb.vertex_of[d] == -1) parse_fail(last_line, "rotation not a permutation");

    try {
        validate(emb);
    } catch (const Error& err) {
        std::string msg = err.what();
        if (msg == "disconnected graph") {
            std::vector<char> reached = reachable_from_zero(emb);
            for (int v = 0; v < emb.V; ++v)
                if (!reached[v]) parse_fail(rot_line_of[v], "disconnected graph");
        }
        parse_fail(last_line, msg);
    }
    return emb;
}

Embedding parse_embedding_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open embedding file: " + path);
    return parse_embedding(in);
}

std::string serialize_embedding(const Embedding& emb) {
    std::ostringstream o;
    o << "surface " << emb.name << "\n";
    o << "vertices " << emb.V << "\n";
    o << "edges " << emb.E << "\n";
    std::vector<int> first(emb.V, -1);
    for (int d = emb.darts() - 1; d >= 0; --d) first[emb.vertex_of[d]] = d;
    for (int v = 0; v < emb.V; ++v) {
        o << "rot " << v << ":";
        if (first[v] != -1) {
            int cur = first[v];
            do {
                o << " " << cur;
                cur = emb.rot_next[cur];
            } while (cur != first[v]);
        }
        o << "\n";
    }
    bool any_twist = false;
    for (int e = 0; e < emb.E; ++e) any_twist |= emb.twist[e] != 0;
    if (any_twist) {
        o << "twist";
        for (int e = 0; e < emb.E; ++e)
            if (emb.twist[e]) o << " " << e;
        o << "\n";
    }
    return o.str();
}

std::vector<int> walk_from_word(const Embedding& emb, const Word& w) {
    std::vector<int> walk;
    walk.reserve(w.size());
    for (Letter x : w) {
        int e = (x > 0 ? x : -x) - 1;
        if (x == 0 || e >= emb.E) fail("dart out of range");
        walk.push_back(dart_of(x));
    }
    check_closed_walk(emb, walk);
    return walk;
}

void check_closed_walk(const Embedding& emb, const std::vector<int>& walk) {
    const int n = (int)walk.size();
    for (int i = 0; i < n; ++i) {
        SURFHOM_CHECK(walk[i] >= 0 && walk[i] < emb.darts(), "dart out of range");
        if (emb.head_of(walk[i]) != emb.vertex_of[walk[(i + 1) % n]]) fail("walk not closed");
    }
}

}  // namespace surfhom
