#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "surfhom/error.hpp"
#include "surfhom/homotopy.hpp"

namespace {

using namespace surfhom;
using nlohmann::json;

// ---------------------------------------------------------------- plumbing

struct SurfaceOpts {
    std::string file;
    int genus = -1;
    bool non_orientable = false;
};

void add_surface_opts(CLI::App* cmd, SurfaceOpts& so) {
    auto* f = cmd->add_option("-f,--file", so.file, "embedding file");
    auto* g = cmd->add_option("-g,--genus", so.genus, "canonical one-vertex surface of this genus")
                  ->check(CLI::NonNegativeNumber);
    cmd->add_flag("-n,--non-orientable", so.non_orientable, "with --genus: non-orientable");
    f->excludes(g);
    g->excludes(f);
}

Embedding load_surface(const SurfaceOpts& so) {
    if (!so.file.empty()) return parse_embedding_file(so.file);
    if (so.genus >= 0) return gen_canonical(so.genus, !so.non_orientable);
    fail("no surface given: pass --file FILE or --genus G");
}

struct RecordSink {
    std::ofstream out;

    explicit RecordSink(const std::string& path) {
        if (path.empty()) return;
        out.open(path, std::ios::app);
        if (!out) fail("cannot open records file: " + path);
    }
    void write(const json& j) {
        if (out) out << j.dump() << "\n";
    }
};

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> read_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open batch file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trimmed(line);
        if (!t.empty() && t[0] != '#') lines.push_back(t);
    }
    return lines;
}

// Runs one(i) for i in [0, count) on `jobs` threads, first exception wins.
template <class Fn>
void run_queries(int jobs, int count, Fn&& one) {
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) one(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex mu;
    std::string first_error;
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                one(i);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(mu);
                if (first_error.empty()) first_error = e.what();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (!first_error.empty()) fail(first_error);
}

uint64_t pick_seed(const std::optional<uint64_t>& given) {
    if (given) return *given;
    return (uint64_t)std::chrono::steady_clock::now().time_since_epoch().count();
}

// ------------------------------------------------------------ cross-checks

// Answer checks against whatever independent witness the surface offers;
// where none exists (genus-3 non-orientable) the answer must at least
// survive reversal, conjugation and squaring, which are free on these
// torsion-free groups.
void check_contractible(const SurfaceHomotopy& sh, const std::vector<int>& walk, bool got) {
    if (auto ora = sh.oracle_contractible(walk)) {
        if (*ora != got) fail("cross-check failed: oracle disagrees on contractibility");
        return;
    }
    if (sh.is_contractible(reverse_walk(walk)) != got)
        fail("cross-check failed: reversal changed the answer");
    if (walk.empty()) return;
    int base = sh.emb.vertex_of[walk.front()];
    for (int d = 0; d < sh.emb.darts(); ++d) {
        if (sh.emb.head_of(d) != base) continue;
        std::vector<int> conj{d};
        conj.insert(conj.end(), walk.begin(), walk.end());
        conj.push_back(opposite(d));
        if (sh.is_contractible(conj) != got)
            fail("cross-check failed: conjugation changed the answer");
        break;
    }
    std::vector<int> sq = walk;
    sq.insert(sq.end(), walk.begin(), walk.end());
    if (sh.is_contractible(sq) != got) fail("cross-check failed: squaring changed the answer");
}

void check_free_homotopic(const SurfaceHomotopy& sh, const std::vector<int>& c,
                          const std::vector<int>& d, bool got) {
    if (sh.cls.orientable && got &&
        abelianize(sh.polygon_word(c), sh.pres) != abelianize(sh.polygon_word(d), sh.pres))
        fail("cross-check failed: homotopic walks with distinct homology");
    if (!got && dehn_applicable(sh.pres) &&
        brute_conjugate(sh.polygon_word(c), sh.polygon_word(d), sh.pres, 2))
        fail("cross-check failed: oracle found a conjugator");
    if (sh.free_homotopic(d, c) != got) fail("cross-check failed: free homotopy asymmetric");
}

// ------------------------------------------------------------- subcommands

int cmd_info(const std::string& file) {
    Embedding emb = parse_embedding_file(file);
    SurfaceClass cls = classify_surface(emb);
    Faces faces = compute_faces(emb);
    std::printf("surface %s\n", emb.name.c_str());
    std::printf("vertices %d\n", emb.V);
    std::printf("edges %d\n", emb.E);
    std::printf("faces %d\n", faces.count);
    std::printf("%s genus %d, chi=%d\n", cls.orientable ? "orientable" : "non-orientable",
                cls.genus, cls.chi);
    return 0;
}

int cmd_contractible(const SurfaceOpts& so, const std::string& walk_text,
                     const std::string& batch, bool check, const std::string& records, int jobs) {
    SurfaceHomotopy sh(load_surface(so));
    RecordSink rec(records);

    std::vector<std::string> inputs =
        batch.empty() ? std::vector<std::string>{walk_text} : read_batch(batch);
    std::vector<char> answers(inputs.size());
    run_queries(jobs, (int)inputs.size(), [&](int i) {
        Word w = parse_word(inputs[i], sh.emb.E);
        std::vector<int> walk = walk_from_word(sh.emb, w);
        bool yes = sh.is_contractible(walk);
        if (check) check_contractible(sh, walk, yes);
        answers[i] = yes;
    });
    for (size_t i = 0; i < inputs.size(); ++i) {
        std::printf("%s\n", answers[i] ? "yes" : "no");
        rec.write({{"command", "contractible"},
                   {"answer", answers[i] ? "yes" : "no"},
                   {"k", (int)parse_word(inputs[i], sh.emb.E).size()}});
    }
    if (!batch.empty()) return 0;
    return answers[0] ? 0 : 1;
}

int cmd_homotopic(const SurfaceOpts& so, std::vector<std::string> words, const std::string& batch,
                  bool fixed, bool check, const std::string& records, int jobs) {
    SurfaceHomotopy sh(load_surface(so));
    RecordSink rec(records);

    std::vector<std::pair<std::string, std::string>> pairs;
    if (batch.empty()) {
        pairs.emplace_back(words[0], words[1]);
    } else {
        for (const std::string& line : read_batch(batch)) {
            size_t bar = line.find('|');
            if (bar == std::string::npos) fail("batch line lacks a '|' separator: " + line);
            pairs.emplace_back(trimmed(line.substr(0, bar)), trimmed(line.substr(bar + 1)));
        }
    }
    std::vector<char> answers(pairs.size());
    std::vector<int> sizes(pairs.size());
    run_queries(jobs, (int)pairs.size(), [&](int i) {
        Word w1 = parse_word(pairs[i].first, sh.emb.E);
        Word w2 = parse_word(pairs[i].second, sh.emb.E);
        sizes[i] = (int)(w1.size() + w2.size());
        std::vector<int> c = walk_from_word(sh.emb, w1);
        std::vector<int> d = walk_from_word(sh.emb, w2);
        bool yes = fixed ? sh.fixed_homotopic(c, d) : sh.free_homotopic(c, d);
        if (check) {
            if (fixed) {
                std::vector<int> cat = c;
                std::vector<int> rev = reverse_walk(d);
                cat.insert(cat.end(), rev.begin(), rev.end());
                check_contractible(sh, cat, yes);
            } else {
                check_free_homotopic(sh, c, d, yes);
            }
        }
        answers[i] = yes;
    });
    for (size_t i = 0; i < pairs.size(); ++i) {
        std::printf("%s\n", answers[i] ? "yes" : "no");
        rec.write({{"command", "homotopic"},
                   {"answer", answers[i] ? "yes" : "no"},
                   {"k", sizes[i]}});
    }
    if (!batch.empty()) return 0;
    return answers[0] ? 0 : 1;
}

int cmd_word(const SurfaceOpts& so, const std::string& text) {
    SurfaceHomotopy sh(load_surface(so));
    Word w = parse_word(text, sh.emb.E);
    Word red = free_reduce(w);
    Word cyc = cyclic_reduce(w);
    std::printf("word %s\n", format_word(w).c_str());
    std::printf("reduced %s\n", format_word(red).c_str());
    std::printf("cyclic %s\n", format_word(cyc).c_str());
    std::printf("length %zu\n", w.size());

    std::vector<int> walk;
    for (Letter x : w) walk.push_back(dart_of(x));
    bool closed = true;
    for (size_t i = 0; i < walk.size(); ++i)
        if (sh.emb.head_of(walk[i]) != sh.emb.vertex_of[walk[(i + 1) % walk.size()]]) closed = false;
    if (!closed) {
        std::printf("open walk\n");
        return 0;
    }
    Word pw = sh.polygon_word(walk);
    std::printf("polygon %s\n", format_word(pw).c_str());
    std::printf("abelian");
    for (long long x : abelianize(pw, sh.pres)) std::printf(" %lld", x);
    std::printf("\n");
    return 0;
}

int cmd_conjugate(const SurfaceOpts& so, const std::string& w1t, const std::string& w2t, int bound,
                  const std::string& records) {
    SurfaceHomotopy sh(load_surface(so));
    RecordSink rec(records);
    Word w1 = parse_word(w1t, sh.emb.E);
    Word w2 = parse_word(w2t, sh.emb.E);
    Word p1 = sh.polygon_word(walk_from_word(sh.emb, w1));
    Word p2 = sh.polygon_word(walk_from_word(sh.emb, w2));
    int k = (int)(w1.size() + w2.size());
    auto answer = [&](const char* a, int code) {
        std::printf("%s\n", a);
        rec.write({{"command", "conjugate"}, {"answer", a}, {"k", k}});
        return code;
    };

    if (!sh.tiled()) {
        if (sh.small->kind == SmallKind::klein) {
            SmallSolver::Form f1 = sh.small->klein_form(p1), f2 = sh.small->klein_form(p2);
            std::printf("form %lld %lld\n", f1.u, f1.v);
            std::printf("form %lld %lld\n", f2.u, f2.v);
            KleinForm a = klein_form_normalize(KleinForm{f1.u, f1.v});
            KleinForm b = klein_form_normalize(KleinForm{f2.u, f2.v});
            bool yes = klein_conjugate(a.u, a.v, b.u, b.v);
            return answer(yes ? "yes" : "no", yes ? 0 : 1);
        }
        bool yes = sh.small->conjugate(p1, p2);
        return answer(yes ? "yes" : "no", yes ? 0 : 1);
    }

    if (dehn_applicable(sh.pres)) {
        if (std::optional<Word> g = brute_conjugate(p1, p2, sh.pres, bound)) {
            std::printf("conjugator %s\n", format_word(*g).c_str());
            return answer("yes", 0);
        }
    }
    if (sh.cls.orientable && abelianize(p1, sh.pres) != abelianize(p2, sh.pres)) {
        std::printf("abelianization differs\n");
        return answer("no", 1);
    }
    return answer("no-certificate", 2);
}

int cmd_gen_canonical(int genus, bool non_orientable, const std::string& out) {
    std::string text = serialize_embedding(gen_canonical(genus, !non_orientable));
    if (out.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::ofstream f(out);
    if (!f) fail("cannot open output file: " + out);
    f << text;
    std::printf("wrote %s\n", out.c_str());
    return 0;
}

int cmd_bench(int genus, const std::string& lengths_csv, int trials,
              const std::optional<uint64_t>& seed_opt, const std::string& records) {
    std::vector<int> lengths;
    std::stringstream ss(lengths_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trimmed(tok);
        if (tok.empty()) continue;
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 2 || v > (1 << 26)) fail("bad length: " + tok);
        lengths.push_back((int)v);
    }
    if (lengths.empty()) fail("no lengths given");
    uint64_t seed = pick_seed(seed_opt);
    std::printf("seed %llu\n", (unsigned long long)seed);
    std::printf("genus %d trials %d\n", genus, trials);

    RecordSink rec(records);
    std::vector<BenchRow> rows = bench_scaling(genus, lengths, trials, seed);
    std::printf("%10s %10s %12s %10s %12s %10s\n", "k", "setup_ms", "contract_ms", "ns/edge",
                "homotopic_ms", "ns/edge");
    for (const BenchRow& r : rows) {
        std::printf("%10d %10.3f %12.3f %10.1f %12.3f %10.1f\n", r.k, r.setup_ms, r.contract_ms,
                    r.contract_ns_per_edge, r.homotopic_ms, r.homotopic_ns_per_edge);
        rec.write({{"command", "bench"},
                   {"phase", "setup"},
                   {"genus", genus},
                   {"k", r.k},
                   {"seed", seed},
                   {"ms", r.setup_ms}});
        rec.write({{"command", "bench"},
                   {"phase", "contractible"},
                   {"genus", genus},
                   {"k", r.k},
                   {"trials", trials},
                   {"seed", seed},
                   {"ms", r.contract_ms},
                   {"ns_per_edge", r.contract_ns_per_edge}});
        rec.write({{"command", "bench"},
                   {"phase", "homotopic"},
                   {"genus", genus},
                   {"k", r.k},
                   {"trials", trials},
                   {"seed", seed},
                   {"ms", r.homotopic_ms},
                   {"ns_per_edge", r.homotopic_ns_per_edge}});
    }
    return 0;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p);
    if (!f) fail("cannot open output file: " + p.string());
    f << text;
    std::printf("wrote %s\n", p.string().c_str());
}

int cmd_fixtures(const std::string& suite, const std::string& out_dir,
                 const std::optional<uint64_t>& seed_opt) {
    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    if (suite == "appendix") {
        Embedding emb = wedge_from_word(parse_word("abcdABCD"), "appendix_genus2");
        write_file(dir / "appendix_surface.txt", serialize_embedding(emb));
        write_file(dir / "appendix_walks.txt",
                   "# contractible closed walks on the appendix genus-2 surface\n"
                   "dcbdcbaDCBDCBA\n"
                   "bcdAdcCDaDCB\n");
        write_file(dir / "appendix_pairs.txt",
                   "# word pairs equal in the surface group (use --fixed-basepoint)\n"
                   "dcbdcb|abcdbcdA\n"
                   "bcd|bcdAdcCDa\n");
        return 0;
    }

    if (suite == "random") {
        uint64_t seed = pick_seed(seed_opt);
        std::printf("seed %llu\n", (unsigned long long)seed);
        WordGen gen(seed);
        SurfaceHomotopy sh(gen_canonical(2, true));
        std::string conj_lines = "# random pairs (c, g c g^-1) on the canonical genus-2 surface\n";
        std::string dist_lines = "# random pairs with distinct abelianization\n";
        for (int i = 0; i < 20; ++i) {
            Word c = gen.random_reduced(4, 2 + (int)(gen.rng() % 15));
            Word g = gen.random_word(4, 1 + (int)(gen.rng() % 6));
            conj_lines += format_word(c) + "|" + format_word(free_reduce(conjugate(g, c))) + "\n";
            Word d;
            do {
                d = gen.random_reduced(4, 2 + (int)(gen.rng() % 15));
            } while (abelianize(d, sh.pres) == abelianize(c, sh.pres));
            dist_lines += format_word(c) + "|" + format_word(d) + "\n";
        }
        write_file(dir / "random_conjugate.txt", conj_lines);
        write_file(dir / "random_distinct.txt", dist_lines);
        return 0;
    }

    if (suite == "klein") {
        std::string lines = "# u v u' v' conjugacy of a^u b^v and a^u' b^v' on the Klein bottle\n";
        for (int u = -3; u <= 3; ++u)
            for (int v = -3; v <= 3; ++v)
                for (int u2 = -3; u2 <= 3; ++u2)
                    for (int v2 = -3; v2 <= 3; ++v2) {
                        KleinForm a = klein_form_normalize(KleinForm{u, v});
                        KleinForm b = klein_form_normalize(KleinForm{u2, v2});
                        bool yes = klein_conjugate(a.u, a.v, b.u, b.v);
                        lines += std::to_string(u) + " " + std::to_string(v) + " " +
                                 std::to_string(u2) + " " + std::to_string(v2) + " " +
                                 (yes ? "yes" : "no") + "\n";
                    }
        write_file(dir / "klein_rules.txt", lines);
        return 0;
    }

    fail("unknown suite: " + suite);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contractibility and free homotopy of closed walks on surface embeddings"};
    app.require_subcommand(1);

    std::function<int()> task;

    {
        auto* c = app.add_subcommand("info", "classify an embedding file");
        auto file = std::make_shared<std::string>();
        c->add_option("file", *file, "embedding file")->required();
        c->callback([=, &task] { task = [=] { return cmd_info(*file); }; });
    }
    {
        auto* c = app.add_subcommand("contractible", "decide contractibility of a closed walk");
        auto so = std::make_shared<SurfaceOpts>();
        auto walk = std::make_shared<std::string>();
        auto batch = std::make_shared<std::string>();
        auto records = std::make_shared<std::string>();
        auto check = std::make_shared<bool>(false);
        auto jobs = std::make_shared<int>(1);
        add_surface_opts(c, *so);
        auto* wopt = c->add_option("walk", *walk, "closed walk as an edge word");
        auto* bopt = c->add_option("--batch", *batch, "file with one walk per line");
        wopt->excludes(bopt);
        bopt->excludes(wopt);
        c->add_flag("--check", *check, "cross-check the answer against the oracle");
        c->add_option("--records", *records, "append machine-readable records to this file");
        c->add_option("--jobs", *jobs, "parallel batch queries")->check(CLI::PositiveNumber);
        c->callback([=, &task] {
            if (walk->empty() && batch->empty() && !wopt->count())
                throw CLI::RequiredError("walk or --batch");
            task = [=] {
                return cmd_contractible(*so, *walk, *batch, *check, *records, *jobs);
            };
        });
    }
    {
        auto* c = app.add_subcommand("homotopic", "decide homotopy of two closed walks");
        auto so = std::make_shared<SurfaceOpts>();
        auto words = std::make_shared<std::vector<std::string>>();
        auto batch = std::make_shared<std::string>();
        auto records = std::make_shared<std::string>();
        auto fixed = std::make_shared<bool>(false);
        auto check = std::make_shared<bool>(false);
        auto jobs = std::make_shared<int>(1);
        add_surface_opts(c, *so);
        auto* wopt = c->add_option("walks", *words, "two closed walks")->expected(0, 2);
        auto* bopt = c->add_option("--batch", *batch, "file with one 'walk|walk' pair per line");
        wopt->excludes(bopt);
        bopt->excludes(wopt);
        c->add_flag("--fixed-basepoint", *fixed, "test homotopy with the basepoint pinned");
        c->add_flag("--check", *check, "cross-check the answer against the oracle");
        c->add_option("--records", *records, "append machine-readable records to this file");
        c->add_option("--jobs", *jobs, "parallel batch queries")->check(CLI::PositiveNumber);
        c->callback([=, &task] {
            if (batch->empty() && words->size() != 2)
                throw CLI::RequiredError("two walks or --batch");
            task = [=] {
                return cmd_homotopic(*so, *words, *batch, *fixed, *check, *records, *jobs);
            };
        });
    }
    {
        auto* c = app.add_subcommand("word", "reduce a word and print its class data");
        auto so = std::make_shared<SurfaceOpts>();
        auto text = std::make_shared<std::string>();
        add_surface_opts(c, *so);
        c->add_option("word", *text, "word over the edge alphabet")->required();
        c->callback([=, &task] { task = [=] { return cmd_word(*so, *text); }; });
    }
    {
        auto* c = app.add_subcommand("conjugate", "oracle-side conjugacy check of two closed walks");
        auto so = std::make_shared<SurfaceOpts>();
        auto w1 = std::make_shared<std::string>();
        auto w2 = std::make_shared<std::string>();
        auto bound = std::make_shared<int>(3);
        auto records = std::make_shared<std::string>();
        add_surface_opts(c, *so);
        c->add_option("walk1", *w1, "first closed walk")->required();
        c->add_option("walk2", *w2, "second closed walk")->required();
        c->add_option("--bound", *bound, "conjugator search bound")->check(CLI::NonNegativeNumber);
        c->add_option("--records", *records, "append machine-readable records to this file");
        c->callback([=, &task] {
            task = [=] { return cmd_conjugate(*so, *w1, *w2, *bound, *records); };
        });
    }
    {
        auto* c = app.add_subcommand("gen-canonical", "print a canonical one-vertex embedding");
        auto genus = std::make_shared<int>(0);
        auto nonor = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        c->add_option("-g,--genus", *genus, "genus")->required()->check(CLI::NonNegativeNumber);
        c->add_flag("-n,--non-orientable", *nonor, "non-orientable");
        c->add_option("-o,--out", *out, "output file (default stdout)");
        c->callback([=, &task] {
            task = [=] { return cmd_gen_canonical(*genus, *nonor, *out); };
        });
    }
    {
        auto* c = app.add_subcommand("bench", "time random queries per word length");
        auto genus = std::make_shared<int>(2);
        auto lengths = std::make_shared<std::string>("1024,4096,16384,65536");
        auto trials = std::make_shared<int>(3);
        auto seed = std::make_shared<std::optional<uint64_t>>();
        auto records = std::make_shared<std::string>();
        c->add_option("--genus", *genus, "orientable genus >= 2")->check(CLI::PositiveNumber);
        c->add_option("--lengths", *lengths, "comma-separated word lengths");
        c->add_option("--trials", *trials, "queries per length")->check(CLI::PositiveNumber);
        c->add_option("--seed", *seed, "word generator seed (default: clock)");
        c->add_option("--records", *records, "append machine-readable records to this file");
        c->callback([=, &task] {
            task = [=] { return cmd_bench(*genus, *lengths, *trials, *seed, *records); };
        });
    }
    {
        auto* c = app.add_subcommand("fixtures", "materialize regression fixture files");
        auto suite = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("fixtures");
        auto seed = std::make_shared<std::optional<uint64_t>>();
        c->add_option("--suite", *suite, "appendix, random or klein")
            ->required()
            ->check(CLI::IsMember({"appendix", "random", "klein"}));
        c->add_option("--out", *out, "output directory");
        c->add_option("--seed", *seed, "word generator seed (default: clock)");
        c->callback([=, &task] {
            task = [=] { return cmd_fixtures(*suite, *out, *seed); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return task();
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
