#pragma once

// Free b-fold coloring of cycles: cut the cycle at the anchored vertex,
// color the resulting path whose endpoint lists are the anchored set, and
// fold the ends back together. Also generates the witness lists showing that
// even cycles below the ratio 2 + 1/p admit no such coloring.

#include <cstdint>

#include "core.hpp"
#include "oracle.hpp"

namespace fch::cyclesolver {

class CycleInstance {
public:
    // lists must share one size a; anchor_colors must be b colors drawn from
    // the anchor vertex's list. Throws std::invalid_argument otherwise.
    CycleInstance(Vertex n, ListAssignment lists, std::int32_t b, Vertex anchor,
                  ColorSet anchor_colors);

    Vertex n() const { return n_; }
    const ListAssignment& lists() const { return lists_; }
    std::int32_t b() const { return b_; }
    std::int32_t a() const { return a_; }
    Vertex anchor() const { return anchor_; }
    const ColorSet& anchor_colors() const { return anchor_colors_; }

    Instance as_instance() const;

private:
    Vertex n_ = 3;
    ListAssignment lists_;
    std::int32_t b_ = 1;
    std::int32_t a_ = 3;
    Vertex anchor_ = 0;
    ColorSet anchor_colors_;
};

// Guaranteed to color whenever a*floor(n/2) >= 2b*floor(n/2) + b; below that
// threshold the exact search settles the anchored instance either way.
SolveReport solve_free_cycle(const CycleInstance& ci,
                             std::uint64_t oracle_budget = oracle::kDefaultBudget);

// The witness a-list family for C_{2p}: fixing {1..b} at vertex 0 leaves no
// valid coloring whenever a/b < 2 + 1/p. Throws std::invalid_argument (quoting
// the violated inequality) outside that range.
ListAssignment counterexample_list(std::int32_t p, std::int32_t a, std::int32_t b);

}  // namespace fch::cyclesolver
