#pragma once

// Constructive coloring of a path whose endpoint lists have size b and whose
// interior lists have uniform size a = 2b + e (e >= 1). Three phases: rename
// colors into a waterfall list, color greedily left to right, then rename
// back and repair any conflicts. The exact oracle backs the pipeline up, so
// the guarantee for n >= even_ceil(2b/e) holds regardless of where the greedy
// pass gives up.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "core.hpp"
#include "oracle.hpp"

namespace fch::pathcolor {

struct WaterfallList {
    ListAssignment lists;  // renamed: vertices at distance >= 2 have disjoint lists
    // per vertex, renamed color -> original color (identity when absent)
    std::vector<std::vector<std::pair<Color, Color>>> rename_log;
};

// Renames later occurrences of each color so that any two lists at distance
// >= 2 become disjoint. Each color keeps its identity on its leftmost run of
// at most two adjacent vertices; every later run gets one fresh identifier
// (shared across the run, so that run's adjacency conflict stays visible).
WaterfallList waterfallize(const ListAssignment& lists);

struct GreedyResult {
    std::optional<Coloring> coloring;
    Vertex failed_at = -1;  // vertex with fewer than b available colors
};

// Takes vertex 0's whole list (it must have size b), then gives each vertex
// the b smallest list colors unused by its predecessor. With end_fixed, the
// final vertex also takes its whole list and its predecessor avoids it.
GreedyResult greedy_forward(const WaterfallList& wl, std::int32_t b, bool end_fixed);

// Maps a coloring over renamed lists back to the original colors, repairing
// any adjacent collision by swapping the color out at the vertex with the
// larger list (ties go right), one pass left to right. nullopt when a
// collision has no substitute color.
std::optional<Coloring> dewaterfallize(const Coloring& renamed, const WaterfallList& wl,
                                       const ListAssignment& original, std::int64_t* repairs);

class PathInstance {
public:
    // lists[0] and lists[n] must have size b; interior lists one common size
    // a with a - 2b >= 1. Throws std::invalid_argument otherwise.
    PathInstance(ListAssignment lists, std::int32_t b);

    const ListAssignment& lists() const { return lists_; }
    std::int32_t b() const { return b_; }
    std::int32_t a() const { return a_; }
    std::int32_t e() const { return a_ - 2 * b_; }
    Vertex n() const { return static_cast<Vertex>(lists_.size()) - 1; }  // path length

private:
    ListAssignment lists_;
    std::int32_t b_ = 1;
    std::int32_t a_ = 3;
};

// Waterfall + greedy + rename-back; exact search when any phase fails. For
// n >= even_ceil(2b/e) the result is always a coloring whose endpoints carry
// their full size-b lists.
SolveReport solve_path(const PathInstance& pi,
                       std::uint64_t oracle_budget = oracle::kDefaultBudget);

}  // namespace fch::pathcolor
