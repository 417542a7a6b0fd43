#include "composite.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>

#include "blocktree.hpp"
#include "cyclesolver.hpp"

namespace fch::composite {

namespace {

ThresholdVerdict composite_threshold(const Instance& inst, const std::optional<Vertex>& girth) {
    ThresholdVerdict verdict;
    const auto a_min = static_cast<std::int64_t>(inst.lists.min_list_size());
    verdict.ratio = Rational(a_min, inst.b);
    if (girth) {
        verdict.rule = ThresholdVerdict::Rule::CycleRatio;
        verdict.required_ratio = fchr_cycle(*girth);
        verdict.met = is_guaranteed_cycle(*girth, a_min, inst.b);
    } else {
        verdict.rule = ThresholdVerdict::Rule::TreeRatio;
        verdict.required_ratio = Rational(2, 1);
        verdict.met = a_min >= 2 * static_cast<std::int64_t>(inst.b);
    }
    return verdict;
}

// Uniform lists are required by the cycle solver; a mixed-size block is
// restricted to its minimum size, keeping the anchored set inside.
ListAssignment restrict_to_uniform(const std::vector<const ColorSet*>& lists,
                                   const ColorSet& anchored) {
    std::size_t a = lists[0]->size();
    for (const ColorSet* l : lists) a = std::min(a, l->size());
    ListAssignment out;
    out.lists.resize(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) {
        if (lists[i]->size() == a) {
            out.lists[i] = *lists[i];
        } else if (i == 0) {
            ColorSet rest = lists[i]->set_minus(anchored);
            std::vector<Color> vals(anchored.begin(), anchored.end());
            for (Color c : rest) {
                if (vals.size() == a) break;
                vals.push_back(c);
            }
            out.lists[i] = ColorSet(std::move(vals));
        } else {
            out.lists[i] = lists[i]->first(a);
        }
    }
    return out;
}

}  // namespace

SolveReport solve_free_composite(const Instance& inst, const CompositeOptions& opt) {
    if (const std::string err = instance_error(inst); !err.empty()) {
        throw std::invalid_argument("solve_free_composite: " + err);
    }
    if (!inst.anchor) {
        throw std::invalid_argument("solve_free_composite: an anchored vertex is required");
    }
    const auto check = validate_tree_of_cycles(inst.shape);
    if (!check.tree) throw std::invalid_argument("solve_free_composite: " + check.error);
    const BlockTree& tree = *check.tree;

    SolveReport report;
    report.threshold = composite_threshold(inst, tree.girth);
    report.total_colors = inst.lists.total_colors();

    const Vertex n = shape_vertex_count(inst.shape);
    const Vertex root = inst.anchor->vertex;
    const std::size_t bs = static_cast<std::size_t>(inst.b);

    // girth dominance: the bound for the shortest cycle covers every block
    if (report.threshold.met && tree.girth) {
        for (const Block& blk : tree.blocks) {
            if (blk.kind == Block::Kind::Cycle) {
                assert(is_guaranteed_cycle(static_cast<std::int64_t>(blk.vertices.size()),
                                           static_cast<std::int64_t>(inst.lists.min_list_size()),
                                           inst.b));
            }
        }
    }

    std::vector<std::optional<ColorSet>> assigned(static_cast<std::size_t>(n));
    assigned[static_cast<std::size_t>(root)] = inst.anchor->colors;

    // blocks in visit order, each entered through an already-colored vertex
    std::vector<bool> seen(tree.blocks.size(), false);
    std::vector<std::pair<std::int32_t, Vertex>> pending;
    for (std::int32_t bi : tree.blocks_of_vertex[static_cast<std::size_t>(root)]) {
        seen[static_cast<std::size_t>(bi)] = true;
        pending.emplace_back(bi, root);
    }

    std::mt19937_64 rng(opt.traversal_seed.value_or(0));
    bool failed = false;
    while (!pending.empty() && !failed) {
        std::size_t pick = 0;
        if (opt.traversal_seed) {
            pick = std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(rng);
        }
        const auto [block_idx, entry] = pending[pick];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
        const Block& blk = tree.blocks[static_cast<std::size_t>(block_idx)];
        const ColorSet& entry_set = *assigned[static_cast<std::size_t>(entry)];

        if (blk.kind == Block::Kind::Bridge) {
            const Vertex other = blk.vertices[0] == entry ? blk.vertices[1] : blk.vertices[0];
            const ColorSet avail = inst.lists.at(other).set_minus(entry_set);
            report.steps += 1;
            if (avail.size() < bs) {
                failed = true;
                break;
            }
            assigned[static_cast<std::size_t>(other)] = avail.first(bs);
        } else {
            std::vector<Vertex> ring = blk.vertices;
            const auto at = std::find(ring.begin(), ring.end(), entry);
            std::rotate(ring.begin(), at, ring.end());
            std::vector<const ColorSet*> ring_lists(ring.size());
            for (std::size_t i = 0; i < ring.size(); ++i) {
                ring_lists[i] = &inst.lists.at(ring[i]);
            }
            ListAssignment block_lists = restrict_to_uniform(ring_lists, entry_set);
            try {
                const cyclesolver::CycleInstance sub(static_cast<Vertex>(ring.size()),
                                                     std::move(block_lists), inst.b, 0,
                                                     entry_set);
                const SolveReport sub_report = cyclesolver::solve_free_cycle(sub, opt.oracle_budget);
                report.steps += sub_report.steps;
                report.repairs += sub_report.repairs;
                report.oracle_nodes += sub_report.oracle_nodes;
                report.fallback_used = report.fallback_used || sub_report.fallback_used;
                if (sub_report.outcome != Outcome::Colored) {
                    failed = true;
                    break;
                }
                for (std::size_t i = 1; i < ring.size(); ++i) {
                    assigned[static_cast<std::size_t>(ring[i])] = sub_report.coloring->at(
                        static_cast<Vertex>(i));
                }
            } catch (const std::invalid_argument&) {
                failed = true;  // e.g. the anchored set no longer fits the restricted list
                break;
            }
        }

        for (Vertex w : blk.vertices) {
            if (w == entry) continue;
            for (std::int32_t bj : tree.blocks_of_vertex[static_cast<std::size_t>(w)]) {
                if (!seen[static_cast<std::size_t>(bj)]) {
                    seen[static_cast<std::size_t>(bj)] = true;
                    pending.emplace_back(bj, w);
                }
            }
        }
    }

    if (!failed) {
        std::vector<ColorSet> by_vertex(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            by_vertex[static_cast<std::size_t>(v)] = *assigned[static_cast<std::size_t>(v)];
        }
        Coloring coloring{std::move(by_vertex)};
        const auto validation = validate_coloring(inst, coloring);
        if (validation.ok) {
            report.outcome = Outcome::Colored;
            report.coloring = std::move(coloring);
            return report;
        }
        failed = true;
    }

    // propagation failed: only possible below threshold
    if (!opt.escalate) {
        report.outcome = Outcome::Unresolved;
        report.note = "block propagation failed below threshold";
        return report;
    }
    if (n > opt.escalation_limit) {
        report.outcome = Outcome::Unresolved;
        report.note = "block propagation failed; instance too large for the exact fallback";
        return report;
    }
    report.fallback_used = true;
    try {
        const oracle::OracleResult exact = oracle::feasible(inst, opt.oracle_budget);
        report.oracle_nodes += exact.nodes;
        if (exact.feasible) {
            report.outcome = Outcome::Colored;
            report.coloring = exact.witness;
        } else {
            report.outcome = Outcome::Infeasible;
        }
    } catch (const oracle::BudgetError& e) {
        report.oracle_nodes += e.nodes;
        report.outcome = Outcome::Unresolved;
        report.note = "exact fallback exceeded its node budget";
    }
    return report;
}

SolveReport solve_free_tree(const Instance& inst) {
    if (const std::string err = instance_error(inst); !err.empty()) {
        throw std::invalid_argument("solve_free_tree: " + err);
    }
    if (!inst.anchor) {
        throw std::invalid_argument("solve_free_tree: an anchored vertex is required");
    }
    const Vertex n = shape_vertex_count(inst.shape);
    const auto edges = shape_edges(inst.shape);
    if (static_cast<std::size_t>(n) != edges.size() + 1) {
        throw std::invalid_argument("solve_free_tree: shape is not a tree");
    }
    const std::size_t a_min = inst.lists.min_list_size();
    if (static_cast<std::int64_t>(a_min) < 2 * static_cast<std::int64_t>(inst.b)) {
        throw std::invalid_argument("solve_free_tree: needs every list size >= 2b");
    }

    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());

    SolveReport report;
    report.threshold.rule = ThresholdVerdict::Rule::TreeRatio;
    report.threshold.required_ratio = Rational(2, 1);
    report.threshold.ratio = Rational(static_cast<std::int64_t>(a_min), inst.b);
    report.threshold.met = true;
    report.total_colors = inst.lists.total_colors();

    const Vertex root = inst.anchor->vertex;
    const std::size_t bs = static_cast<std::size_t>(inst.b);
    std::vector<ColorSet> c(static_cast<std::size_t>(n));
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    c[static_cast<std::size_t>(root)] = inst.anchor->colors;
    visited[static_cast<std::size_t>(root)] = true;

    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex v : adj[static_cast<std::size_t>(u)]) {
            if (visited[static_cast<std::size_t>(v)]) continue;
            visited[static_cast<std::size_t>(v)] = true;
            c[static_cast<std::size_t>(v)] =
                inst.lists.at(v).set_minus(c[static_cast<std::size_t>(u)]).first(bs);
            report.steps += 1;
            queue.push_back(v);
        }
    }
    if (queue.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("solve_free_tree: shape is not connected");
    }

    Coloring coloring{std::move(c)};
    assert(validate_coloring(inst, coloring).ok);
    report.outcome = Outcome::Colored;
    report.coloring = std::move(coloring);
    return report;
}

}  // namespace fch::composite
