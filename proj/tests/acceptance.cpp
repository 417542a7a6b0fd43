// Acceptance suite: runs every criterion end to end at full scale and prints
// one [PASS]/[FAIL] line each. Exits non-zero if any line fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <tuple>
#include <vector>

#include "composite.hpp"
#include "cyclesolver.hpp"
#include "document.hpp"
#include "oracle.hpp"
#include "pathcolor.hpp"
#include "solver.hpp"
#include "testutil.hpp"

using namespace fch;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] %d %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++g_failures;
}

ColorSet range_set(Color lo, Color hi) {
    std::vector<Color> v;
    for (Color c = lo; c <= hi; ++c) v.push_back(c);
    return ColorSet(std::move(v));
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// 1. The generated 6-cycle witness list matches the closed form entry for
//    entry, and exact search proves the anchored instance infeasible fast.
void criterion_witness_list() {
    bool ok = true;
    std::ostringstream detail;

    const ListAssignment lists = cyclesolver::counterexample_list(3, 9, 4);
    const std::vector<ColorSet> expected = {
        range_set(1, 9),  range_set(1, 9),  range_set(5, 13),
        range_set(10, 18), range_set(14, 22),
        ColorSet({1, 2, 3, 4, 19, 20, 21, 22, 23})};
    for (std::size_t v = 0; v < expected.size(); ++v) {
        if (!(lists.at(static_cast<Vertex>(v)) == expected[v])) {
            ok = false;
            detail << "list " << v << " differs; ";
        }
    }

    Instance inst;
    inst.shape = CycleShape{6};
    inst.lists = lists;
    inst.b = 4;
    inst.anchor = Anchor{0, ColorSet({1, 2, 3, 4})};
    const auto t0 = std::chrono::steady_clock::now();
    const auto result = oracle::feasible(inst);
    const double elapsed = ms_since(t0);
    if (result.feasible) {
        ok = false;
        detail << "anchored instance reported feasible; ";
    }
    if (elapsed >= 1000.0) {
        ok = false;
        detail << "search took " << elapsed << " ms; ";
    }
    if (ok) {
        detail << "6 lists exact, infeasible in " << elapsed << " ms, "
               << result.nodes << " nodes";
    }
    report(1, "witness list reproduction and anchored infeasibility", ok, detail.str());
}

// 2. Every (p, a, b) with p in {2,3}, b <= 4, b < a < (2 + 1/p) b generates a
//    list whose lexicographically first anchored set {1..b} fails. Exact.
void criterion_witness_family() {
    bool ok = true;
    int cases = 0;
    std::ostringstream detail;
    for (std::int32_t p = 2; p <= 3; ++p) {
        for (std::int32_t b = 1; b <= 4; ++b) {
            for (std::int32_t a = b + 1; Rational(a, b) < Rational(2 * p + 1, p); ++a) {
                ++cases;
                Instance inst;
                inst.shape = CycleShape{2 * p};
                inst.lists = cyclesolver::counterexample_list(p, a, b);
                inst.b = b;
                const auto check = oracle::free_check_list(inst, 0);
                const bool failed_at_first =
                    !check.all_extendable && check.failing_anchor == range_set(1, b) &&
                    check.anchors_checked == 1;
                if (!failed_at_first) {
                    ok = false;
                    detail << "(p=" << p << ",a=" << a << ",b=" << b << ") did not fail at {1.."
                           << b << "}; ";
                }
            }
        }
    }
    if (ok) detail << cases << " parameter sets, all fail at {1..b}";
    report(2, "generated families below threshold are not freely colorable", ok, detail.str());
}

// 3. Minimal frontier pairs color 500 random anchored instances per length.
void criterion_cycle_frontier() {
    const std::pair<int, std::pair<int, int>> frontier[] = {
        {3, {3, 1}}, {4, {5, 2}}, {5, {5, 2}}, {6, {7, 3}},
        {7, {7, 3}}, {8, {9, 4}}, {9, {9, 4}}};
    bool ok = true;
    std::ostringstream detail;
    int total = 0;
    for (const auto& [n, ab] : frontier) {
        const auto [a, b] = ab;
        auto rng = testutil::rng_for(0x3000 + static_cast<std::uint64_t>(n));
        for (int trial = 0; trial < 500; ++trial) {
            ++total;
            const Instance inst = testutil::random_cycle_instance(rng, n, a, b, 3 * a, true);
            const cyclesolver::CycleInstance ci(n, inst.lists, b, inst.anchor->vertex,
                                                inst.anchor->colors);
            const SolveReport r = cyclesolver::solve_free_cycle(ci);
            if (r.outcome != Outcome::Colored || !validate_coloring(inst, *r.coloring).ok) {
                ok = false;
                detail << "n=" << n << " trial " << trial << " failed; ";
            }
        }
    }
    if (ok) detail << total << " instances colored and validated";
    report(3, "minimal guaranteed ratios color every random cycle instance", ok, detail.str());
}

// 4. The path engine succeeds on 500 random instances at each quoted profile.
void criterion_path_profiles() {
    const std::tuple<int, int, int> profiles[] = {{4, 9, 8}, {4, 11, 4}};  // (b, a, n)
    bool ok = true;
    std::ostringstream detail;
    int fallbacks = 0;
    for (const auto& [b, a, n] : profiles) {
        auto rng = testutil::rng_for(0x4000 + static_cast<std::uint64_t>(a));
        for (int trial = 0; trial < 500; ++trial) {
            const ListAssignment lists =
                testutil::random_path_profile_lists(rng, n, a, b, 3 * a);
            const pathcolor::PathInstance pi(lists, b);
            const SolveReport r = pathcolor::solve_path(pi);
            const Instance inst{PathShape{n}, lists, b, std::nullopt};
            if (r.outcome != Outcome::Colored || !validate_coloring(inst, *r.coloring).ok) {
                ok = false;
                detail << "(b=" << b << ",a=" << a << ",n=" << n << ") trial " << trial
                       << " failed; ";
            }
            if (r.fallback_used) ++fallbacks;
        }
    }
    if (ok) detail << "1000 instances colored (exact fallback in " << fallbacks << ")";
    report(4, "path engine succeeds at both quoted length bounds", ok, detail.str());
}

// 5. Exhaustive solver/oracle agreement over every list family and anchored
//    set for tiny cycles. Zero tolerance.
void criterion_small_scale_equivalence() {
    bool ok = true;
    std::int64_t checked = 0;
    std::ostringstream detail;
    const std::vector<Color> universe{1, 2, 3, 4};

    for (const int n : {3, 4}) {
        for (const int a : {2, 3}) {
            // all a-subsets of the universe
            std::vector<ColorSet> choices;
            std::vector<int> pick(static_cast<std::size_t>(a));
            std::function<void(std::size_t, int)> gen = [&](std::size_t at, int start) {
                if (at == pick.size()) {
                    std::vector<Color> s;
                    for (int i : pick) s.push_back(universe[static_cast<std::size_t>(i)]);
                    choices.push_back(ColorSet(std::move(s)));
                    return;
                }
                for (int i = start; i < 4; ++i) {
                    pick[at] = i;
                    gen(at + 1, i + 1);
                }
            };
            gen(0, 0);

            // odometer over per-vertex choices
            std::vector<std::size_t> family(static_cast<std::size_t>(n), 0);
            while (true) {
                Instance inst;
                inst.shape = CycleShape{n};
                inst.b = 1;
                for (int v = 0; v < n; ++v) {
                    inst.lists.lists.push_back(choices[family[static_cast<std::size_t>(v)]]);
                }
                for (const Color c0 : inst.lists.at(0)) {
                    inst.anchor = Anchor{0, ColorSet({c0})};
                    ++checked;
                    const cyclesolver::CycleInstance ci(n, inst.lists, 1, 0, ColorSet({c0}));
                    const SolveReport solved = cyclesolver::solve_free_cycle(ci);
                    const bool exact = oracle::feasible(inst).feasible;
                    if ((solved.outcome == Outcome::Colored) != exact) {
                        ok = false;
                        detail << "disagreement at n=" << n << " a=" << a << "; ";
                    }
                    if (solved.outcome == Outcome::Colored &&
                        !validate_coloring(inst, *solved.coloring).ok) {
                        ok = false;
                        detail << "invalid coloring at n=" << n << "; ";
                    }
                }
                std::size_t i = 0;
                while (i < family.size() && ++family[i] == choices.size()) {
                    family[i] = 0;
                    ++i;
                }
                if (i == family.size()) break;
            }
        }
    }
    if (ok) detail << checked << " anchored instances, verdicts identical";
    report(5, "solver and oracle agree exhaustively at small scale", ok, detail.str());
}

// 6. Random trees of cycles at the girth frontier, plus the named two-cycle
//    golden instance.
void criterion_composite() {
    bool ok = true;
    std::ostringstream detail;
    const auto frontier_pair = [](int girth) {
        int b = girth / 2;
        return std::pair<int, int>(2 * b + 1, b);  // ratio (2b+1)/b == fchr of the girth
    };

    int total = 0;
    for (int girth = 3; girth <= 6; ++girth) {
        const auto [a, b] = frontier_pair(girth);
        auto rng = testutil::rng_for(0x6000 + static_cast<std::uint64_t>(girth));
        for (int trial = 0; trial < 50; ++trial) {
            ++total;
            const auto cactus = testutil::random_cactus(rng, girth, 30, 1);
            const Instance inst = testutil::random_cactus_instance(rng, cactus, a, b, 3 * a);
            const SolveReport r = composite::solve_free_composite(inst);
            if (r.outcome != Outcome::Colored || !validate_coloring(inst, *r.coloring).ok) {
                ok = false;
                detail << "girth " << girth << " trial " << trial << " failed; ";
            }
        }
    }

    // golden: 4-cycle and 6-cycle joined by a two-edge path, (a, b) = (5, 2)
    TreeOfCyclesShape shape;
    shape.vertex_count = 11;
    shape.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5},
                   {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 5}};
    auto rng = testutil::rng_for(0x6B60);
    for (int trial = 0; trial < 50; ++trial) {
        ++total;
        Instance inst;
        inst.shape = shape;
        inst.b = 2;
        inst.lists = testutil::random_lists(rng, 11, 5, 15);
        const auto v = static_cast<Vertex>(rng() % 11);
        inst.anchor = Anchor{v, testutil::random_subset(rng, inst.lists.at(v), 2)};
        const SolveReport r = composite::solve_free_composite(inst);
        if (r.outcome != Outcome::Colored || !validate_coloring(inst, *r.coloring).ok ||
            !(r.threshold.required_ratio == Rational(5, 2))) {
            ok = false;
            detail << "two-cycle golden trial " << trial << " failed; ";
        }
    }

    if (ok) detail << total << " instances colored and validated";
    report(6, "trees of cycles color at the girth frontier", ok, detail.str());
}

// 7. Wall-clock shape: 100k-vertex cycles solve in under two seconds and
//    doubling the length scales by less than 3x.
void criterion_performance() {
    const auto timed_solve = [](Vertex n, std::uint64_t seed) {
        auto rng = testutil::rng_for(seed);
        ListAssignment lists;
        lists.lists.reserve(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) lists.lists.push_back(testutil::random_colorset(rng, 5, 15));
        const ColorSet c0 = testutil::random_subset(rng, lists.at(0), 2);
        const cyclesolver::CycleInstance ci(n, std::move(lists), 2, 0, c0);
        double best = 1e18;
        Outcome outcome = Outcome::Unresolved;
        for (int rep = 0; rep < 5; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            const SolveReport r = cyclesolver::solve_free_cycle(ci);
            best = std::min(best, ms_since(t0));
            outcome = r.outcome;
        }
        return std::pair<double, Outcome>(best, outcome);
    };

    const auto [small_ms, small_outcome] = timed_solve(100000, 0x7001);
    const auto [large_ms, large_outcome] = timed_solve(200000, 0x7002);
    const double ratio = large_ms / small_ms;

    bool ok = true;
    std::ostringstream detail;
    if (small_outcome != Outcome::Colored || large_outcome != Outcome::Colored) {
        ok = false;
        detail << "large instances did not color; ";
    }
    if (small_ms >= 2000.0) {
        ok = false;
        detail << "100k took " << small_ms << " ms; ";
    }
    if (ratio >= 3.0) {
        ok = false;
        detail << "200k/100k ratio " << ratio << "; ";
    }
    if (ok) {
        char buffer[128];
        std::snprintf(buffer, sizeof buffer, "100k: %.1f ms, 200k: %.1f ms, ratio %.2f",
                      small_ms, large_ms, ratio);
        detail << buffer;
    }
    report(7, "solving scale is linear and fast", ok, detail.str());
}

// 8. The exact threshold table for n = 3..12.
void criterion_threshold_table() {
    const std::vector<std::string> expected{"3/1", "5/2", "5/2", "7/3",  "7/3",
                                            "9/4", "9/4", "11/5", "11/5", "13/6"};
    bool ok = true;
    std::ostringstream detail;
    for (int n = 3; n <= 12; ++n) {
        const std::string got = fchr_cycle(n).str();
        if (got != expected[static_cast<std::size_t>(n - 3)]) {
            ok = false;
            detail << "n=" << n << " gave " << got << "; ";
        }
    }
    if (ok) detail << "n=3..12 all exact";
    report(8, "threshold table matches the closed form", ok, detail.str());
}

}  // namespace

int main() {
    criterion_witness_list();
    criterion_witness_family();
    criterion_cycle_frontier();
    criterion_path_profiles();
    criterion_small_scale_equivalence();
    criterion_composite();
    criterion_performance();
    criterion_threshold_table();

    std::printf("ACCEPTANCE: %d/8 passed\n", 8 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
