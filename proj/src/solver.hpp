#pragma once

// Shape dispatch: routes an instance to the path pipeline, the cycle solver
// or the block-tree solver, choosing a default anchor when none is given and
// keeping infeasibility claims exact for unanchored instances.

#include <cstdint>

#include "core.hpp"
#include "oracle.hpp"

namespace fch {

struct SolveOptions {
    std::uint64_t oracle_budget = oracle::kDefaultBudget;
    Vertex escalation_limit = 20;
};

SolveReport solve(const Instance& inst, const SolveOptions& opt = {});

}  // namespace fch
