#pragma once

// Free b-fold coloring of trees and trees of cycles: color the anchored
// vertex's block first, then walk the block tree outward, each block entered
// through one already-colored vertex. Cycle blocks delegate to the cycle
// solver anchored at the entry vertex; tree edges extend greedily.

#include <cstdint>
#include <optional>

#include "core.hpp"
#include "oracle.hpp"

namespace fch::composite {

struct CompositeOptions {
    std::uint64_t oracle_budget = oracle::kDefaultBudget;
    // Exact fallback is attempted only below this many vertices.
    Vertex escalation_limit = 20;
    // Whether a failed propagation may escalate to the exact search at all.
    bool escalate = true;
    // Shuffles the block visit order (used to check order independence).
    std::optional<std::uint64_t> traversal_seed;
};

// Requires an anchored instance whose shape passes tree-of-cycles validation.
// Succeeds unconditionally when the girth threshold holds (no cycles: minimum
// list size >= 2b; cycles: the girth's cycle-ratio bound).
SolveReport solve_free_composite(const Instance& inst, const CompositeOptions& opt = {});

// Tree-only specialization: root at the anchor, hand every child the b
// smallest list colors its parent does not use. Requires minimum list size
// >= 2b (throws std::invalid_argument otherwise) and an acyclic shape.
SolveReport solve_free_tree(const Instance& inst);

}  // namespace fch::composite
