#include "solver.hpp"

#include <stdexcept>

#include "blocktree.hpp"
#include "composite.hpp"
#include "cyclesolver.hpp"
#include "pathcolor.hpp"

namespace fch {

namespace {

SolveReport oracle_report(const Instance& inst, ThresholdVerdict threshold,
                          std::uint64_t budget) {
    SolveReport report;
    report.threshold = threshold;
    report.total_colors = inst.lists.total_colors();
    report.fallback_used = true;
    try {
        const oracle::OracleResult exact = oracle::feasible(inst, budget);
        report.oracle_nodes = exact.nodes;
        report.outcome = exact.feasible ? Outcome::Colored : Outcome::Infeasible;
        report.coloring = exact.witness;
    } catch (const oracle::BudgetError& e) {
        report.oracle_nodes = e.nodes;
        report.outcome = Outcome::Unresolved;
        report.note = "exact search exceeded its node budget";
    }
    return report;
}

ThresholdVerdict tree_threshold(const Instance& inst) {
    ThresholdVerdict v;
    v.rule = ThresholdVerdict::Rule::TreeRatio;
    v.required_ratio = Rational(2, 1);
    v.ratio = Rational(static_cast<std::int64_t>(inst.lists.min_list_size()), inst.b);
    v.met = v.ratio >= v.required_ratio;
    return v;
}

bool path_profile_matches(const Instance& inst, const PathShape& shape) {
    const Vertex n = shape.length;
    if (n < 2) return false;
    const std::size_t bs = static_cast<std::size_t>(inst.b);
    if (inst.lists.at(0).size() != bs || inst.lists.at(n).size() != bs) return false;
    const std::size_t a = inst.lists.at(1).size();
    if (a < 2 * bs + 1) return false;
    for (Vertex i = 1; i < n; ++i) {
        if (inst.lists.at(i).size() != a) return false;
    }
    if (inst.anchor) {
        const Vertex v = inst.anchor->vertex;
        if (v != 0 && v != n) return false;
        if (!(inst.anchor->colors == inst.lists.at(v))) return false;
    }
    return true;
}

SolveReport solve_path_shape(const Instance& inst, const PathShape& shape,
                             const SolveOptions& opt) {
    if (path_profile_matches(inst, shape)) {
        pathcolor::PathInstance pi(inst.lists, inst.b);
        SolveReport report = pathcolor::solve_path(pi, opt.oracle_budget);
        // endpoint anchors are honored automatically: those sets are forced
        return report;
    }

    const ThresholdVerdict threshold = tree_threshold(inst);
    if (threshold.met && shape.length >= 1) {
        Instance anchored = inst;
        if (!anchored.anchor) {
            anchored.anchor =
                Anchor{0, inst.lists.at(0).first(static_cast<std::size_t>(inst.b))};
        }
        return composite::solve_free_tree(anchored);
    }
    return oracle_report(inst, threshold, opt.oracle_budget);
}

SolveReport solve_cycle_shape(const Instance& inst, const CycleShape& shape,
                              const SolveOptions& opt) {
    const auto uniform = inst.lists.uniform_size();
    if (!uniform) {
        // mixed list sizes fall outside the cycle pipeline; settle exactly
        ThresholdVerdict v;
        v.rule = ThresholdVerdict::Rule::CycleRatio;
        v.required_ratio = fchr_cycle(shape.length);
        v.ratio = Rational(static_cast<std::int64_t>(inst.lists.min_list_size()), inst.b);
        v.met = false;
        return oracle_report(inst, v, opt.oracle_budget);
    }
    const auto a = static_cast<std::int64_t>(*uniform);
    const bool guaranteed = is_guaranteed_cycle(shape.length, a, inst.b);

    if (inst.anchor) {
        const cyclesolver::CycleInstance ci(shape.length, inst.lists, inst.b,
                                            inst.anchor->vertex, inst.anchor->colors);
        return cyclesolver::solve_free_cycle(ci, opt.oracle_budget);
    }

    if (guaranteed && inst.lists.at(0).size() >= static_cast<std::size_t>(inst.b)) {
        const cyclesolver::CycleInstance ci(
            shape.length, inst.lists, inst.b, 0,
            inst.lists.at(0).first(static_cast<std::size_t>(inst.b)));
        return cyclesolver::solve_free_cycle(ci, opt.oracle_budget);
    }

    // unanchored below threshold: infeasibility must quantify over all starts
    ThresholdVerdict v;
    v.rule = ThresholdVerdict::Rule::CycleRatio;
    v.required_ratio = fchr_cycle(shape.length);
    v.ratio = Rational(a, inst.b);
    v.met = guaranteed;
    return oracle_report(inst, v, opt.oracle_budget);
}

SolveReport solve_tree_of_cycles_shape(const Instance& inst, const SolveOptions& opt) {
    const auto check = validate_tree_of_cycles(inst.shape);
    if (!check.tree) throw std::invalid_argument(check.error);

    composite::CompositeOptions copt;
    copt.oracle_budget = opt.oracle_budget;
    copt.escalation_limit = opt.escalation_limit;

    if (inst.anchor) {
        return composite::solve_free_composite(inst, copt);
    }

    Instance anchored = inst;
    anchored.anchor = Anchor{0, inst.lists.at(0).size() >= static_cast<std::size_t>(inst.b)
                                    ? inst.lists.at(0).first(static_cast<std::size_t>(inst.b))
                                    : ColorSet{}};
    if (anchored.anchor->colors.size() != static_cast<std::size_t>(inst.b)) {
        // vertex 0 cannot even hold b colors; settle exactly
        SolveReport report = oracle_report(inst, ThresholdVerdict{}, opt.oracle_budget);
        report.threshold = tree_threshold(inst);
        report.threshold.met = false;
        return report;
    }
    copt.escalate = false;  // the fallback below must stay unanchored
    SolveReport report = composite::solve_free_composite(anchored, copt);
    if (report.outcome == Outcome::Colored) return report;

    const ThresholdVerdict threshold = report.threshold;
    if (shape_vertex_count(inst.shape) > opt.escalation_limit) {
        report.outcome = Outcome::Unresolved;
        report.note = "propagation failed; instance too large for the exact fallback";
        return report;
    }
    SolveReport exact = oracle_report(inst, threshold, opt.oracle_budget);
    exact.steps += report.steps;
    return exact;
}

}  // namespace

SolveReport solve(const Instance& inst, const SolveOptions& opt) {
    if (const std::string err = instance_error(inst); !err.empty()) {
        throw std::invalid_argument(err);
    }
    if (const auto* path = std::get_if<PathShape>(&inst.shape)) {
        if (path->length == 0) {
            // single vertex
            return oracle_report(inst, tree_threshold(inst), opt.oracle_budget);
        }
        return solve_path_shape(inst, *path, opt);
    }
    if (const auto* cycle = std::get_if<CycleShape>(&inst.shape)) {
        return solve_cycle_shape(inst, *cycle, opt);
    }
    return solve_tree_of_cycles_shape(inst, opt);
}

}  // namespace fch
