// fch — command-line front end for the freechoose library. Subcommands:
//   solve           color an instance document
//   verify          check a claimed coloring against an instance
//   oracle          exact feasibility / per-anchor extension check
//   counterexample  emit the even-cycle witness list as a ready-to-solve document
//   ratio           exact cycle threshold as num/den
//   sweep           empirical frontier map over (n, a, b) grids
//
// Exit codes: 0 success/colored, 1 usage or input error, 2 negative
// mathematical result (infeasible, invalid coloring, uncolored below
// threshold). Reports go to stdout, diagnostics to stderr.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "freechoose.h"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int fail(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return 1;
}

int fail_last() { return fail(fch_last_error()); }

struct InstanceHandle {
    fch_instance* ptr = nullptr;
    ~InstanceHandle() { fch_instance_free(ptr); }
};

struct ReportHandle {
    fch_report* ptr = nullptr;
    ~ReportHandle() { fch_report_free(ptr); }
};

void print_report(const fch_report* report, const std::string& format) {
    char* text = nullptr;
    const fch_status status = format == "structured" ? fch_report_to_json(report, &text)
                                                     : fch_report_to_text(report, &text);
    if (status == FCH_OK) {
        std::cout << text;
        fch_string_free(text);
    }
}

int outcome_exit_code(const fch_report* report) {
    return fch_report_outcome(report) == FCH_COLORED ? 0 : 2;
}

// ---- randomness (seeded, per-cell, order independent) ----------------------

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t cell_seed(std::uint64_t seed, std::int64_t n, std::int64_t a, std::int64_t b,
                        std::int64_t trial) {
    std::uint64_t h = splitmix64(seed ^ 0x66636873ull);
    h = splitmix64(h ^ static_cast<std::uint64_t>(n));
    h = splitmix64(h ^ static_cast<std::uint64_t>(a));
    h = splitmix64(h ^ static_cast<std::uint64_t>(b));
    h = splitmix64(h ^ static_cast<std::uint64_t>(trial));
    return h;
}

// a distinct colors from {1..universe}
std::vector<std::int32_t> sample_colors(std::mt19937_64& rng, std::int32_t a,
                                        std::int32_t universe) {
    std::vector<std::int32_t> pool(static_cast<std::size_t>(universe));
    std::iota(pool.begin(), pool.end(), 1);
    for (std::int32_t i = 0; i < a; ++i) {
        const auto j = std::uniform_int_distribution<std::size_t>(
            static_cast<std::size_t>(i), pool.size() - 1)(rng);
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(a));
    return pool;
}

// ---- range parsing ("4..7" or "5") ------------------------------------------

struct Range {
    std::int32_t lo = 0;
    std::int32_t hi = -1;  // empty by default
    bool given = false;
};

bool parse_range(const std::string& text, Range& out) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            out.lo = out.hi = std::stoi(text);
        } else {
            out.lo = std::stoi(text.substr(0, dots));
            out.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    out.given = true;
    return true;
}

// ---- subcommands -------------------------------------------------------------

int run_solve(const std::string& input, std::uint64_t budget, const std::string& format) {
    std::string text;
    try {
        text = read_input(input);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    InstanceHandle inst;
    if (fch_instance_from_json(text.c_str(), &inst.ptr) != FCH_OK) return fail_last();

    ReportHandle report;
    const auto t0 = std::chrono::steady_clock::now();
    if (fch_solve(inst.ptr, budget, &report.ptr) != FCH_OK) return fail_last();
    const auto dt =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);

    print_report(report.ptr, format);
    std::cerr << "solved in " << dt.count() << " ms\n";
    return outcome_exit_code(report.ptr);
}

int run_verify(const std::string& instance_path, const std::string& coloring_path,
               const std::string& format) {
    std::string instance_text;
    std::string coloring_text;
    try {
        instance_text = read_input(instance_path);
        coloring_text = read_input(coloring_path);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    InstanceHandle inst;
    if (fch_instance_from_json(instance_text.c_str(), &inst.ptr) != FCH_OK) return fail_last();
    ReportHandle report;
    if (fch_verify(inst.ptr, coloring_text.c_str(), &report.ptr) != FCH_OK) return fail_last();
    print_report(report.ptr, format);
    return outcome_exit_code(report.ptr);
}

int run_oracle(const std::string& input, std::uint64_t budget, std::int32_t free_check_vertex,
               const std::string& format) {
    std::string text;
    try {
        text = read_input(input);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    InstanceHandle inst;
    if (fch_instance_from_json(text.c_str(), &inst.ptr) != FCH_OK) return fail_last();
    if (free_check_vertex >= 0) {
        // the free check quantifies over anchored sets itself
        fch_instance_clear_anchor(inst.ptr);
    }

    ReportHandle report;
    const fch_status status =
        free_check_vertex >= 0
            ? fch_oracle_free_check(inst.ptr, free_check_vertex, budget, &report.ptr)
            : fch_oracle_feasible(inst.ptr, budget, &report.ptr);
    if (status != FCH_OK) return fail_last();
    print_report(report.ptr, format);
    return outcome_exit_code(report.ptr);
}

int run_counterexample(std::int32_t p, std::int32_t a, std::int32_t b) {
    InstanceHandle inst;
    if (fch_counterexample_even_cycle(p, a, b, &inst.ptr) != FCH_OK) return fail_last();
    char* text = nullptr;
    if (fch_instance_to_json(inst.ptr, &text) != FCH_OK) return fail_last();
    std::cout << text;
    fch_string_free(text);
    return 0;
}

int run_ratio(std::int64_t n) {
    if (n < 3 || n > INT32_MAX) return fail("cycle length must be between 3 and 2^31-1");
    std::int64_t num = 0;
    std::int64_t den = 0;
    if (fch_fchr_cycle(static_cast<std::int32_t>(n), &num, &den) != FCH_OK) return fail_last();
    std::cout << num << '/' << den << '\n';
    return 0;
}

struct SweepRow {
    std::int32_t n = 0, a = 0, b = 0;
    std::string ratio;
    std::string fchr;
    bool guaranteed = false;
    std::int32_t solved = 0;
    std::int32_t trials = 0;
    std::string witness = "-";  // below-threshold infeasibility confirmation
    std::string oracle = "-";   // exact spot-check agreement
};

// One grid cell: random anchored instances, solver success count, plus the
// below-threshold witness list and oracle spot checks where applicable.
bool sweep_cell(SweepRow& row, std::uint64_t seed, std::int32_t universe_opt,
                std::uint64_t budget) {
    const std::int32_t n = row.n;
    const std::int32_t a = row.a;
    const std::int32_t b = row.b;
    const std::int32_t universe = universe_opt > 0 ? std::max(universe_opt, a) : 3 * a;

    std::int32_t oracle_checks = 0;
    std::int32_t oracle_agree = 0;
    const bool spot_check = n <= 8 && a <= 12;

    for (std::int32_t trial = 0; trial < row.trials; ++trial) {
        std::mt19937_64 rng(cell_seed(seed, n, a, b, trial));
        InstanceHandle inst;
        if (fch_instance_create_cycle(n, &inst.ptr) != FCH_OK) return false;
        fch_instance_set_b(inst.ptr, b);
        std::vector<std::vector<std::int32_t>> lists;
        lists.reserve(static_cast<std::size_t>(n));
        for (std::int32_t v = 0; v < n; ++v) {
            lists.push_back(sample_colors(rng, a, universe));
            if (fch_instance_set_list(inst.ptr, v, lists.back().data(), a) != FCH_OK) {
                return false;
            }
        }
        const auto anchor_vertex =
            std::uniform_int_distribution<std::int32_t>(0, n - 1)(rng);
        std::vector<std::int32_t> anchor = lists[static_cast<std::size_t>(anchor_vertex)];
        for (std::int32_t i = 0; i < b; ++i) {
            const auto j = std::uniform_int_distribution<std::size_t>(
                static_cast<std::size_t>(i), anchor.size() - 1)(rng);
            std::swap(anchor[static_cast<std::size_t>(i)], anchor[j]);
        }
        anchor.resize(static_cast<std::size_t>(b));
        if (fch_instance_set_anchor(inst.ptr, anchor_vertex, anchor.data(), b) != FCH_OK) {
            return false;
        }

        ReportHandle solved;
        if (fch_solve(inst.ptr, budget, &solved.ptr) != FCH_OK) return false;
        const fch_outcome outcome = fch_report_outcome(solved.ptr);
        if (outcome == FCH_COLORED) ++row.solved;

        if (spot_check && trial < 3) {
            ReportHandle exact;
            if (fch_oracle_feasible(inst.ptr, budget, &exact.ptr) != FCH_OK) return false;
            ++oracle_checks;
            const bool oracle_feasible = fch_report_outcome(exact.ptr) == FCH_COLORED;
            const bool solver_colored = outcome == FCH_COLORED;
            if (solver_colored == oracle_feasible) ++oracle_agree;
        }
    }

    if (oracle_checks > 0) {
        row.oracle = oracle_agree == oracle_checks
                         ? "agree(" + std::to_string(oracle_checks) + ")"
                         : "MISMATCH";
    }

    // even cycles strictly below threshold carry a constructive witness list
    if (n % 2 == 0 && n >= 4 && !row.guaranteed && a >= b) {
        InstanceHandle witness;
        if (fch_counterexample_even_cycle(n / 2, a, b, &witness.ptr) == FCH_OK) {
            ReportHandle exact;
            const fch_status status = fch_oracle_feasible(witness.ptr, budget, &exact.ptr);
            if (status == FCH_ERR_BUDGET) return false;
            if (status == FCH_OK) {
                row.witness = fch_report_outcome(exact.ptr) == FCH_INFEASIBLE ? "infeasible-ok"
                                                                              : "FEASIBLE";
            }
        }
    }
    return true;
}

int run_sweep(Range n_range, Range a_range, Range b_range, std::int32_t trials,
              std::uint64_t seed, std::int32_t universe, std::uint64_t budget,
              const std::string& format) {
    if (!n_range.given) n_range = Range{3, 8, true};
    if (!b_range.given) b_range = Range{1, 2, true};
    if (trials < 0) return fail("--trials must be non-negative");

    std::vector<SweepRow> rows;
    for (std::int32_t n = n_range.lo; n <= n_range.hi; ++n) {
        if (n < 3) continue;
        for (std::int32_t b = b_range.lo; b <= b_range.hi; ++b) {
            if (b < 1) continue;
            const std::int32_t a_lo = a_range.given ? a_range.lo : 2 * b;
            const std::int32_t a_hi = a_range.given ? a_range.hi : 3 * b;
            for (std::int32_t a = a_lo; a <= a_hi; ++a) {
                if (a < 1) continue;
                SweepRow row;
                row.n = n;
                row.a = a;
                row.b = b;
                row.trials = trials;
                const std::int64_t g = std::gcd<std::int64_t>(a, b);
                row.ratio = std::to_string(a / g) + "/" + std::to_string(b / g);
                std::int64_t num = 0;
                std::int64_t den = 0;
                fch_fchr_cycle(n, &num, &den);
                row.fchr = std::to_string(num) + "/" + std::to_string(den);
                std::int32_t guaranteed = 0;
                fch_cycle_guaranteed(n, a, b, &guaranteed);
                row.guaranteed = guaranteed == 1;
                rows.push_back(std::move(row));
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
        return std::tie(x.n, x.a, x.b) < std::tie(y.n, y.a, y.b);
    });

    bool truncated = false;
    std::size_t completed = 0;
    for (SweepRow& row : rows) {
        if (!sweep_cell(row, seed, universe, budget)) {
            truncated = true;
            break;
        }
        ++completed;
    }
    rows.resize(completed);

    if (format == "structured") {
        nlohmann::ordered_json out;
        out["format"] = 1;
        out["kind"] = "sweep";
        out["seed"] = seed;
        out["trials"] = trials;
        out["truncated"] = truncated;
        auto json_rows = nlohmann::ordered_json::array();
        for (const SweepRow& row : rows) {
            nlohmann::ordered_json r;
            r["n"] = row.n;
            r["a"] = row.a;
            r["b"] = row.b;
            r["ratio"] = row.ratio;
            r["fchr"] = row.fchr;
            r["guaranteed"] = row.guaranteed;
            r["solved"] = row.solved;
            r["trials"] = row.trials;
            r["witness"] = row.witness;
            r["oracle"] = row.oracle;
            json_rows.push_back(std::move(r));
        }
        out["rows"] = std::move(json_rows);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "# sweep seed=" << seed << " trials=" << trials << " universe="
                  << (universe > 0 ? std::to_string(universe) : std::string("3a")) << '\n';
        std::printf("%4s %4s %4s %8s %8s %11s %9s %15s %10s\n", "n", "a", "b", "ratio", "fchr",
                    "guaranteed", "solved", "witness", "oracle");
        for (const SweepRow& row : rows) {
            std::printf("%4d %4d %4d %8s %8s %11s %5d/%-3d %15s %10s\n", row.n, row.a, row.b,
                        row.ratio.c_str(), row.fchr.c_str(), row.guaranteed ? "yes" : "no",
                        row.solved, row.trials, row.witness.c_str(), row.oracle.c_str());
        }
        if (truncated) std::cout << "# truncated: node budget exceeded\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"free b-fold list colorings of paths, cycles and trees of cycles"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string coloring_path;
    std::string format = "text";
    std::uint64_t budget = 0;
    std::uint64_t seed = 1;
    std::int32_t trials = 20;
    std::int32_t universe = 0;
    std::int32_t free_check_vertex = -1;
    std::int64_t ratio_n = 0;
    std::int32_t p = 0, a = 0, b = 0;
    std::string n_range_text, a_range_text, b_range_text;

    auto* solve_cmd = app.add_subcommand("solve", "color an instance document");
    solve_cmd->add_option("input", input, "instance file, or - for stdin");
    solve_cmd->add_option("--budget", budget, "exact-search node budget (0 = default)");
    solve_cmd->add_option("--format", format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));

    auto* verify_cmd = app.add_subcommand("verify", "check a coloring against an instance");
    verify_cmd->add_option("instance", input, "instance file, or - for stdin")->required();
    verify_cmd->add_option("coloring", coloring_path, "coloring or report document")->required();
    verify_cmd->add_option("--format", format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "exact feasibility check");
    oracle_cmd->add_option("input", input, "instance file, or - for stdin");
    oracle_cmd->add_option("--budget", budget, "exact-search node budget (0 = default)");
    oracle_cmd->add_option("--free-check", free_check_vertex,
                           "check every b-subset anchored at this vertex");
    oracle_cmd->add_option("--format", format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));

    auto* counter_cmd =
        app.add_subcommand("counterexample", "emit the even-cycle witness list for C_{2p}");
    counter_cmd->add_option("p", p, "half cycle length (>= 2)")->required();
    counter_cmd->add_option("a", a, "list size")->required();
    counter_cmd->add_option("b", b, "colors per vertex")->required();

    auto* ratio_cmd = app.add_subcommand("ratio", "exact cycle threshold as num/den");
    ratio_cmd->add_option("n", ratio_n, "cycle length")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "empirical frontier map over (n, a, b)");
    sweep_cmd->add_option("--n", n_range_text, "cycle lengths, e.g. 4..7 (default 3..8)");
    sweep_cmd->add_option("--a", a_range_text, "list sizes, e.g. 4..9 (default 2b..3b)");
    sweep_cmd->add_option("--b", b_range_text, "set sizes, e.g. 1..2 (default 1..2)");
    sweep_cmd->add_option("--trials", trials, "random instances per cell (default 20)");
    sweep_cmd->add_option("--seed", seed, "random seed (default 1)");
    sweep_cmd->add_option("--universe", universe, "color universe size (default 3a)");
    sweep_cmd->add_option("--budget", budget, "exact-search node budget (0 = default)");
    sweep_cmd->add_option("--format", format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (solve_cmd->parsed()) return run_solve(input, budget, format);
    if (verify_cmd->parsed()) return run_verify(input, coloring_path, format);
    if (oracle_cmd->parsed()) return run_oracle(input, budget, free_check_vertex, format);
    if (counter_cmd->parsed()) return run_counterexample(p, a, b);
    if (ratio_cmd->parsed()) return run_ratio(ratio_n);
    if (sweep_cmd->parsed()) {
        Range n_range, a_range, b_range;
        if (!n_range_text.empty() && !parse_range(n_range_text, n_range)) {
            return fail("--n: expected LO..HI or a single integer");
        }
        if (!a_range_text.empty() && !parse_range(a_range_text, a_range)) {
            return fail("--a: expected LO..HI or a single integer");
        }
        if (!b_range_text.empty() && !parse_range(b_range_text, b_range)) {
            return fail("--b: expected LO..HI or a single integer");
        }
        return run_sweep(n_range, a_range, b_range, trials, seed, universe, budget, format);
    }
    return 1;
}
