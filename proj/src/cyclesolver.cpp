#include "cyclesolver.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

#include "pathcolor.hpp"

namespace fch::cyclesolver {

CycleInstance::CycleInstance(Vertex n, ListAssignment lists, std::int32_t b, Vertex anchor,
                             ColorSet anchor_colors)
    : n_(n),
      lists_(std::move(lists)),
      b_(b),
      anchor_(anchor),
      anchor_colors_(std::move(anchor_colors)) {
    if (n_ < 3) throw std::invalid_argument("CycleInstance: cycle length must be at least 3");
    if (b_ < 1) throw std::invalid_argument("CycleInstance: b must be positive");
    if (static_cast<Vertex>(lists_.size()) != n_) {
        throw std::invalid_argument("CycleInstance: expected one list per cycle vertex");
    }
    const auto uniform = lists_.uniform_size();
    if (!uniform) throw std::invalid_argument("CycleInstance: lists must share one size");
    a_ = static_cast<std::int32_t>(*uniform);
    if (anchor_ < 0 || anchor_ >= n_) {
        throw std::invalid_argument("CycleInstance: anchor vertex out of range");
    }
    if (static_cast<std::int32_t>(anchor_colors_.size()) != b_) {
        throw std::invalid_argument("CycleInstance: anchored set must have exactly b colors");
    }
    if (!anchor_colors_.subset_of(lists_.at(anchor_))) {
        throw std::invalid_argument("CycleInstance: anchored set must come from the vertex list");
    }
}

Instance CycleInstance::as_instance() const {
    return Instance{CycleShape{n_}, lists_, b_, Anchor{anchor_, anchor_colors_}};
}

SolveReport solve_free_cycle(const CycleInstance& ci, std::uint64_t oracle_budget) {
    const Vertex n = ci.n();
    const Instance inst = ci.as_instance();

    SolveReport report;
    report.threshold.rule = ThresholdVerdict::Rule::CycleRatio;
    report.threshold.required_ratio = fchr_cycle(n);
    report.threshold.ratio = Rational(ci.a(), ci.b());
    report.threshold.met = is_guaranteed_cycle(n, ci.a(), ci.b());
    report.total_colors = ci.lists().total_colors();

    auto fold_path_coloring = [&](const Coloring& along_path) {
        std::vector<ColorSet> by_vertex(static_cast<std::size_t>(n));
        for (Vertex i = 0; i < n; ++i) {
            by_vertex[static_cast<std::size_t>((ci.anchor() + i) % n)] = along_path.at(i);
        }
        return Coloring{std::move(by_vertex)};
    };

    if (ci.a() - 2 * ci.b() >= 1) {
        // cut at the anchor: both endpoint lists are the anchored set
        ListAssignment cut;
        cut.lists.resize(static_cast<std::size_t>(n) + 1);
        cut.lists[0] = ci.anchor_colors();
        cut.lists[static_cast<std::size_t>(n)] = ci.anchor_colors();
        for (Vertex i = 1; i < n; ++i) {
            cut.lists[static_cast<std::size_t>(i)] = ci.lists().at((ci.anchor() + i) % n);
        }
        const pathcolor::PathInstance pi(std::move(cut), ci.b());
        SolveReport path_report = pathcolor::solve_path(pi, oracle_budget);

        report.outcome = path_report.outcome;
        report.fallback_used = path_report.fallback_used;
        report.repairs = path_report.repairs;
        report.steps = path_report.steps;
        report.oracle_nodes = path_report.oracle_nodes;
        report.note = path_report.note;
        if (path_report.outcome == Outcome::Colored) {
            Coloring folded = fold_path_coloring(*path_report.coloring);
            assert(validate_coloring(inst, folded).ok);
            report.coloring = std::move(folded);
        }
        return report;
    }

    // a <= 2b: the greedy pipeline cannot run; settle exactly
    report.fallback_used = true;
    try {
        const oracle::OracleResult exact = oracle::feasible(inst, oracle_budget);
        report.oracle_nodes = exact.nodes;
        if (exact.feasible) {
            report.outcome = Outcome::Colored;
            report.coloring = exact.witness;
        } else {
            report.outcome = Outcome::Infeasible;
        }
    } catch (const oracle::BudgetError& e) {
        report.oracle_nodes = e.nodes;
        report.outcome = Outcome::Unresolved;
        report.note = "exact search exceeded its node budget";
    }
    return report;
}

ListAssignment counterexample_list(std::int32_t p, std::int32_t a, std::int32_t b) {
    if (p < 2) throw std::invalid_argument("counterexample_list: need p >= 2");
    if (b < 1) throw std::invalid_argument("counterexample_list: need b >= 1");
    if (a < b) throw std::invalid_argument("counterexample_list: need a >= b");
    const Rational ratio(a, b);
    const Rational bound(2 * p + 1, p);
    if (!(ratio < bound)) {
        throw std::invalid_argument("counterexample_list: need a/b < 2 + 1/p, but " +
                                    ratio.str() + " >= " + bound.str());
    }

    auto range = [](Color lo, Color hi) {  // {lo..hi} inclusive
        std::vector<Color> v(static_cast<std::size_t>(hi - lo + 1));
        std::iota(v.begin(), v.end(), lo);
        return v;
    };

    const Vertex n = 2 * p;
    ListAssignment out;
    out.lists.resize(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) {
        std::vector<Color> colors;
        if (i == 0 || i == 1) {
            colors = range(1, a);
        } else if (i == n - 1) {
            colors = range(1, b);
            const auto tail = range((p - 1) * a + 1, p * a - b);
            colors.insert(colors.end(), tail.begin(), tail.end());
        } else if (i % 2 == 1) {
            const Color off = ((i - 1) / 2) * a;
            colors = range(off + 1, off + a);
        } else {
            const Color off = b + ((i - 2) / 2) * a;
            colors = range(off + 1, off + a);
        }
        out.lists[static_cast<std::size_t>(i)] = ColorSet(std::move(colors));
    }
    return out;
}

}  // namespace fch::cyclesolver
