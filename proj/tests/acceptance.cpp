// Acceptance suite. Runs every criterion with exact integer checks and
// prints one pass/fail line per criterion; the process exit code is the
// number of failed criteria. Criterion 10 drives the CLI binary given via
// --cli.

#include <sys/wait.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "thetadiv/io.hpp"
#include "thetadiv/scan.hpp"
#include "thetadiv/semistable.hpp"
#include "thetadiv/theta.hpp"

using namespace thetadiv;

namespace {

std::string g_cli;
int g_failures = 0;

void report(int index, const std::string& description, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", index,
                description.c_str(), detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

// Runs fn on every graph of the canonical family, in parallel batches. fn
// must only touch its own locals and atomics.
template <class Fn>
void parallel_family(int max_n, int max_e, long long max_w, const Fn& per_graph) {
    std::vector<DualGraph> batch;
    batch.reserve(256);
    auto flush = [&] {
        const auto count = static_cast<std::int64_t>(batch.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (std::int64_t i = 0; i < count; ++i) per_graph(batch[static_cast<size_t>(i)]);
        batch.clear();
    };
    gen::for_each_small_graph(max_n, max_e, max_w, [&](const DualGraph& g) {
        batch.push_back(g);
        if (batch.size() >= 256) flush();
    });
    flush();
}

// All multidegrees of the given total whose coordinates lie in the orientation
// range [g_v - 1 + loops, g_v - 1 + loops + nonloop_valence] widened by
// margin. Semistable multidegrees of totals g-2, g-1 and g never leave the
// unwidened box, so equivalence checks over this set are exhaustive.
std::vector<Multidegree> box_candidates(const DualGraph& g, long long total, int margin) {
    const int n = g.vertex_count();
    std::vector<long long> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        const long long base = g.weight(v) - 1 + g.loops_at(v);
        const long long nonloop = g.valence(v) - 2 * g.loops_at(v);
        lo[static_cast<size_t>(v)] = base - margin;
        hi[static_cast<size_t>(v)] = base + nonloop + margin;
    }
    std::vector<long long> suffix_lo(static_cast<size_t>(n) + 1, 0);
    std::vector<long long> suffix_hi(static_cast<size_t>(n) + 1, 0);
    for (int v = n - 1; v >= 0; --v) {
        suffix_lo[static_cast<size_t>(v)] = suffix_lo[static_cast<size_t>(v) + 1] + lo[static_cast<size_t>(v)];
        suffix_hi[static_cast<size_t>(v)] = suffix_hi[static_cast<size_t>(v) + 1] + hi[static_cast<size_t>(v)];
    }
    std::vector<Multidegree> out;
    Multidegree cur;
    cur.values.assign(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int v, long long remaining) -> void {
        if (v == n) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (long long x = lo[static_cast<size_t>(v)]; x <= hi[static_cast<size_t>(v)]; ++x) {
            const long long rest = remaining - x;
            if (rest < suffix_lo[static_cast<size_t>(v) + 1] ||
                rest > suffix_hi[static_cast<size_t>(v) + 1])
                continue;
            cur.values[static_cast<size_t>(v)] = x;
            self(self, v + 1, rest);
        }
    };
    rec(rec, 0, total);
    return out;
}

std::vector<std::string> corpus_names() {
    return {"fig1", "ex44k3", "ex44k4", "ex44k5", "ex44k6",
            "ex54", "ex55",   "ex63",   "ex66",   "ex67"};
}

// ---- criterion 1 ----

void criterion1() {
    long long checks = 0;
    bool ok = true;
    auto expect = [&](bool cond) {
        ++checks;
        ok = ok && cond;
    };
    for (int k = 3; k <= 6; ++k) {
        const DualGraph g = fixture("ex44k" + std::to_string(k));
        const Multidegree d({-1, k - 1});
        expect(is_semistable(g, d));
        expect(!is_stable(g, d));
        expect(!theta_exists(g, d).exists);
    }
    const DualGraph ex54 = fixture("ex54");
    expect(!is_semistable(ex54, Multidegree({2, -1, 0})));
    expect(is_semistable(ex54, Multidegree({-1, 2, 0})));
    expect(!is_semistable(fixture("ex55"), Multidegree({2, 0, 0})));
    const DualGraph ex63 = fixture("ex63");
    expect(is_semistable(ex63, Multidegree({0, 3, 0})));
    for (int v = 0; v < 3; ++v) expect(!is_semistable(ex63, Multidegree({0, 3, 0}).plus(v)));
    expect(is_stable(fixture("ex66"), Multidegree({-1, 3})));
    expect(is_stable(fixture("ex67"), Multidegree({2, 2})));
    report(1, "paper-example regression suite", ok, std::to_string(checks) + " exact verdicts");
}

// ---- criterion 2 ----

void criterion2() {
    std::atomic<long long> graphs{0}, cases{0}, failures{0};
    parallel_family(4, 6, 2, [&](const DualGraph& g) {
        if (g.genus() < 2) return;  // the inequality needs 2g - 2 > 0
        graphs.fetch_add(1);
        const auto image = oracle::orientation_image(g);
        for (const Multidegree& d : box_candidates(g, g.genus() - 1, 1)) {
            const bool by_definition = is_semistable(g, d);
            const bool by_flow = is_orientable(g, d);
            const bool by_enumeration =
                std::binary_search(image.begin(), image.end(), d);
            cases.fetch_add(1);
            if (by_definition != by_flow || by_flow != by_enumeration) failures.fetch_add(1);
        }
    });
    report(2, "orientability criterion at degree g-1 (three routes)", failures.load() == 0,
           std::to_string(cases.load()) + " multidegrees on " + std::to_string(graphs.load()) +
               " graphs");
}

// ---- criterion 3 ----

bool valid_cycle_witness(const DualGraph& g, const Orientation& o, EdgeIndex e,
                         const std::vector<EdgeIndex>& edges) {
    if (std::count(edges.begin(), edges.end(), e) != 1) return false;
    if (g.edge(e).is_loop()) return edges.size() == 1;
    std::vector<EdgeIndex> out_edge(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<int> in_count(static_cast<size_t>(g.vertex_count()), 0);
    for (EdgeIndex f : edges) {
        if (g.edge(f).is_loop()) return false;
        const VertexIndex h = head_of(g, o, f).value();
        const Edge& fd = g.edge(f);
        const VertexIndex t = fd.a == h ? fd.b : fd.a;
        if (out_edge[static_cast<size_t>(t)] != -1) return false;
        out_edge[static_cast<size_t>(t)] = f;
        if (++in_count[static_cast<size_t>(h)] > 1) return false;
    }
    EdgeIndex cur = edges.front();
    for (size_t step = 0; step < edges.size(); ++step) {
        cur = out_edge[static_cast<size_t>(head_of(g, o, cur).value())];
        if (cur < 0) return false;
    }
    return cur == edges.front();
}

void criterion3() {
    std::atomic<long long> cases{0}, failures{0};
    parallel_family(4, 6, 0, [&](const DualGraph& g) {
        for (const Orientation& o : enumerate_orientations(g)) {
            for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
                cases.fetch_add(1);
                const bool cycle = oracle::has_cycle_through(g, o, e);
                const bool cut = oracle::has_cut_containing(g, o, e);
                bool ok = (cycle != cut);
                const MintyWitness w = minty_decompose(g, o, e);
                if (w.kind == MintyWitness::Kind::DirectedCycle) {
                    ok = ok && cycle && valid_cycle_witness(g, o, e, w.edges);
                } else {
                    ok = ok && cut && w.sink_side.has_value();
                    if (ok) {
                        ok = w.edges == cut_edges(g, *w.sink_side) &&
                             std::count(w.edges.begin(), w.edges.end(), e) == 1;
                        for (EdgeIndex f : w.edges)
                            ok = ok && w.sink_side->contains(head_of(g, o, f).value());
                    }
                }
                if (!ok) failures.fetch_add(1);
            }
        }
    });
    report(3, "cycle/cut exclusivity with structural witnesses", failures.load() == 0,
           std::to_string(cases.load()) + " (orientation, edge) pairs");
}

// ---- criterion 4 ----

void criterion4() {
    std::atomic<long long> graphs{0}, cases{0}, failures{0};
    parallel_family(4, 6, 2, [&](const DualGraph& g) {
        if (!is_stable_curve(g)) return;  // hypothesis of the characterization
        graphs.fetch_add(1);
        for (const long long total : {g.genus() - 2, g.genus()}) {
            for (const Multidegree& d : box_candidates(g, total, 1)) {
                cases.fetch_add(1);
                if (semistable_via_vertex_shifts(g, d) != is_semistable(g, d))
                    failures.fetch_add(1);
            }
        }
    });
    report(4, "vertex-shift characterization at degrees g-2 and g", failures.load() == 0,
           std::to_string(cases.load()) + " multidegrees on " + std::to_string(graphs.load()) +
               " stable graphs");
}

// ---- criterion 5 ----

void criterion5() {
    std::mt19937 rng(182818);
    const auto names = corpus_names();
    std::map<std::pair<std::string, long long>, std::vector<Multidegree>> cache;
    auto semistable_sample = [&](const DualGraph& g, const std::string& name, long long total,
                                 std::optional<Multidegree>& out) {
        const auto key = std::make_pair(name, total);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, enumerate_semistable(g, total)).first;
        if (it->second.empty()) return;
        std::uniform_int_distribution<size_t> pick(0, it->second.size() - 1);
        out = it->second[pick(rng)];
    };

    long long down = 0, up = 0, failures = 0;
    long long attempts = 0;
    while ((down < 1000 || up < 1000) && ++attempts < 100000) {
        const std::string name = names[static_cast<size_t>(attempts) % names.size()];
        const DualGraph g = fixture(name);
        if (down < 1000) {
            std::uniform_int_distribution<long long> td(g.genus(), g.genus() + 4);
            std::optional<Multidegree> d;
            semistable_sample(g, name, td(rng), d);
            if (d) {
                for (const auto target : {ReduceTarget::Genus, ReduceTarget::GenusMinusOne}) {
                    const Multidegree e = reduce_down(g, *d, target);
                    const Multidegree r = *d - e;
                    if (!is_effective(e) || r.total() != reduce_target_value(g, target) ||
                        !is_semistable(g, r))
                        ++failures;
                }
                ++down;
            }
        }
        if (up < 1000) {
            std::uniform_int_distribution<long long> td(g.genus() - 6, g.genus() - 2);
            std::optional<Multidegree> d;
            semistable_sample(g, name, td(rng), d);
            if (d) {
                for (const auto target :
                     {ReduceTarget::GenusMinusTwo, ReduceTarget::GenusMinusOne}) {
                    const Multidegree e = reduce_up(g, *d, target);
                    const Multidegree r = *d + e;
                    if (!is_effective(e) || r.total() != reduce_target_value(g, target) ||
                        !is_semistable(g, r))
                        ++failures;
                }
                ++up;
            }
        }
    }
    report(5, "reduction contracts on sampled semistable multidegrees",
           failures == 0 && down == 1000 && up == 1000,
           std::to_string(down) + " downward and " + std::to_string(up) +
               " upward samples across the corpus");
}

// ---- criterion 6 ----

void criterion6() {
    std::atomic<long long> graphs{0}, cases{0}, failures{0};
    parallel_family(4, 6, 0, [&](const DualGraph& g) {
        if (!is_stable_curve(g)) return;
        graphs.fetch_add(1);
        for (const Multidegree& d : enumerate_semistable(g, g.genus() - 1)) {
            cases.fetch_add(1);
            const bool exists = theta_exists(g, d).exists;
            const bool peel = admits_acyclic_orientation(g, d).has_value();
            const bool brute = oracle::acyclic_realization(g, d).has_value();
            if (exists != !peel || peel != brute) failures.fetch_add(1);
        }
    });
    report(6, "theta emptiness = acyclic realization on weightless stable graphs",
           failures.load() == 0,
           std::to_string(cases.load()) + " semistable multidegrees on " +
               std::to_string(graphs.load()) + " graphs");
}

// ---- criterion 7 ----

void criterion7() {
    std::mt19937 rng(577215);
    const auto names = corpus_names();
    long long failures = 0;
    for (int i = 0; i < 10000; ++i) {
        const DualGraph g = fixture(names[static_cast<size_t>(i) % names.size()]);
        const Multidegree d = gen::random_multidegree(rng, g, 3);
        const Multidegree r = residual(g, d);
        if (is_semistable(g, d) != is_semistable(g, r)) ++failures;
        if (is_stable(g, d) != is_stable(g, r)) ++failures;
    }
    report(7, "residual duality for semistability and stability", failures == 0,
           "10000 random multidegrees across the corpus");
}

// ---- criterion 8 ----

void criterion8() {
    std::atomic<long long> graphs{0}, cases{0}, failures{0};
    parallel_family(4, 6, 2, [&](const DualGraph& g) {
        if (!is_stable_curve(g)) return;
        graphs.fetch_add(1);
        for (const Multidegree& d : enumerate_semistable(g, g.genus())) {
            cases.fetch_add(1);
            if (!is_effective(d)) failures.fetch_add(1);
        }
    });
    report(8, "semistable multidegrees of total degree g are effective", failures.load() == 0,
           std::to_string(cases.load()) + " multidegrees on " + std::to_string(graphs.load()) +
               " stable graphs, zero counterexamples required");
}

// ---- criterion 9 ----

void criterion9() {
    std::atomic<long long> graphs{0}, cases{0}, failures{0};
    parallel_family(4, 6, 2, [&](const DualGraph& g) {
        if (!is_stable_curve(g)) return;
        graphs.fetch_add(1);
        std::map<std::vector<long long>, bool> exists_cache;
        for (const Orientation& o : enumerate_orientations(g)) {
            cases.fetch_add(1);
            const Multidegree d = multidegree_of(g, o);
            auto it = exists_cache.find(d.values);
            if (it == exists_cache.end())
                it = exists_cache.emplace(d.values, theta_exists(g, d).exists).first;
            const auto comps = theta_components(g, o);
            bool ok = comps.empty() == !it->second;
            if (is_stable(g, d))
                ok = ok && comps.size() == 1 && comps[0] == VertexSet::full(g);
            if (!ok) failures.fetch_add(1);
        }
    });
    report(9, "theta component sets match existence and stability", failures.load() == 0,
           std::to_string(cases.load()) + " orientations on " + std::to_string(graphs.load()) +
               " stable graphs");
}

// ---- criterion 10 ----

std::pair<int, std::string> run_cli(const std::string& command_line) {
    FILE* pipe = popen(command_line.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::string out;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void criterion10() {
    struct Invocation {
        std::string args;
        int expected_exit;
    };
    const std::vector<Invocation> battery = {
        {"check --fixture ex63 --multidegree 0,3,0 --json", 0},
        {"check --fixture ex54 --multidegree 2,-1,0 --json", 1},
        {"theta --fixture ex44k4 --multidegree -1,3 --json", 1},
        {"theta --fixture ex54 --multidegree 0,2,0 --json", 0},
        {"enumerate --fixture fig1 --total 1 --json", 0},
        {"canonical --fixture ex66 --json", 0},
        {"orient --fixture fig1 --multidegree 0,1 --json", 0},
        {"acyclic --fixture ex44k3 --multidegree -1,2 --json", 0},
        {"minty --fixture fig1 --orientation ab,ab,ba --edge 0 --json", 0},
        {"components --fixture ex54 --orientation ab,ab,ab,ab --json", 0},
        {"reduce --fixture ex63 --multidegree 0,3,0 --target g-2 --json", 0},
        {"residual --fixture ex66 --multidegree -1,3 --json", 0},
        {"fixtures --json", 0},
    };
    long long failures = 0;
    for (const Invocation& inv : battery) {
        const std::string base = "'" + g_cli + "' " + inv.args + " 2>/dev/null";
        std::vector<std::pair<int, std::string>> runs;
        for (int i = 0; i < 3; ++i) runs.push_back(run_cli(base));
        for (const char* threads : {"1", "4"})
            runs.push_back(run_cli(std::string("env OMP_NUM_THREADS=") + threads + " " + base));
        for (const auto& [code, out] : runs) {
            if (code != inv.expected_exit || out != runs.front().second || out.empty())
                ++failures;
        }
    }
    report(10, "CLI structured output is byte-identical across runs and thread counts",
           failures == 0, std::to_string(battery.size()) + " commands, 5 runs each");
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2)
        if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: acceptance --cli <path to the thetadiv binary>\n");
        return 64;
    }
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", g_failures);
    return g_failures;
}
