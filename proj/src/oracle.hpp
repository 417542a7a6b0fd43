#pragma once

// Exact decision procedures for b-fold list colorability. Paths and cycles
// run a dynamic program over candidate b-subsets per vertex; trees of cycles
// backtrack over the block tree with the cycle DP as the per-block subroutine.
// Every other module is checked against this one.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "core.hpp"

namespace fch::oracle {

inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(std::uint64_t nodes_explored)
        : std::runtime_error("exact search exceeded its node budget"),
          nodes(nodes_explored) {}
    std::uint64_t nodes;
};

struct OracleResult {
    bool feasible = false;
    std::optional<Coloring> witness;  // present iff feasible
    std::uint64_t nodes = 0;
};

// Decides whether the instance admits a b-fold list coloring respecting the
// anchor when present. Exact; intended for desk-scale inputs (paths and cycles
// of any length, trees of cycles of roughly twenty vertices).
OracleResult feasible(const Instance& inst, std::uint64_t budget = kDefaultBudget);

struct FreeCheckResult {
    bool all_extendable = false;
    std::optional<ColorSet> failing_anchor;  // lexicographically first failure
    std::uint64_t anchors_checked = 0;
    std::uint64_t nodes = 0;
};

// Runs `feasible` once for every b-subset c0 of L(v), in lexicographic order,
// and reports the first failing c0 (or that all of them extend). The instance
// must not already carry an anchor.
FreeCheckResult free_check_list(const Instance& inst, Vertex v,
                                std::uint64_t budget = kDefaultBudget);

}  // namespace fch::oracle
