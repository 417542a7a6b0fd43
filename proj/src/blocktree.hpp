#pragma once

// Structural validation for tree-of-cycles graphs: connected, every
// biconnected block a single edge or a chordless cycle, cycle blocks
// pairwise vertex-disjoint. Produces the block decomposition used by the
// composite solver.

#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace fch {

struct Block {
    enum class Kind { Bridge, Cycle };
    Kind kind = Kind::Bridge;
    // Bridge: the two endpoints. Cycle: the vertices in ring order.
    std::vector<Vertex> vertices;
};

struct BlockTree {
    std::vector<Block> blocks;
    std::vector<std::vector<std::int32_t>> blocks_of_vertex;  // vertex -> block indices
    std::optional<Vertex> girth;  // shortest cycle block; absent when acyclic
};

struct TreeOfCyclesCheck {
    std::optional<BlockTree> tree;  // present iff accepted
    std::string error;              // first violated condition when rejected
};

TreeOfCyclesCheck validate_tree_of_cycles(const GraphShape& shape);

}  // namespace fch
