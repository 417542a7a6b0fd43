#pragma once

// Domain types for b-fold list coloring: color sets, list assignments, graph
// shapes (path / cycle / tree of cycles), instances, colorings and solve
// reports, plus the exact threshold arithmetic for cycles.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rational.hpp"

namespace fch {

using Vertex = std::int32_t;
using Color = std::int32_t;

// Sorted set of non-negative color identifiers. Ascending iteration order is
// what makes every "first b colors" rule deterministic.
class ColorSet {
public:
    ColorSet() = default;

    // Sorts the input; rejects negatives and duplicates.
    explicit ColorSet(std::vector<Color> values);

    // Trusted constructor for values already sorted and unique.
    static ColorSet from_sorted_unique(std::vector<Color> values);

    const std::vector<Color>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    bool contains(Color c) const;
    bool subset_of(const ColorSet& other) const;
    bool disjoint_with(const ColorSet& other) const;
    ColorSet set_minus(const ColorSet& other) const;
    ColorSet intersect(const ColorSet& other) const;

    // The k smallest elements; k must not exceed size().
    ColorSet first(std::size_t k) const;

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    friend bool operator==(const ColorSet&, const ColorSet&) = default;

private:
    std::vector<Color> values_;
};

// Per-vertex color lists, indexed by vertex.
struct ListAssignment {
    std::vector<ColorSet> lists;

    std::size_t size() const { return lists.size(); }
    const ColorSet& at(Vertex v) const { return lists[static_cast<std::size_t>(v)]; }

    std::size_t min_list_size() const;
    // The common list size, or nullopt when sizes differ (or no lists).
    std::optional<std::size_t> uniform_size() const;
    // Number of distinct colors across all lists.
    std::int64_t total_colors() const;

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

struct PathShape {
    Vertex length = 0;  // vertices 0..length
    friend bool operator==(const PathShape&, const PathShape&) = default;
};
struct CycleShape {
    Vertex length = 0;  // vertices 0..length-1
    friend bool operator==(const CycleShape&, const CycleShape&) = default;
};
struct TreeOfCyclesShape {
    Vertex vertex_count = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    friend bool operator==(const TreeOfCyclesShape&, const TreeOfCyclesShape&) = default;
};

using GraphShape = std::variant<PathShape, CycleShape, TreeOfCyclesShape>;

Vertex shape_vertex_count(const GraphShape& shape);
std::vector<std::pair<Vertex, Vertex>> shape_edges(const GraphShape& shape);

struct Anchor {
    Vertex vertex = 0;
    ColorSet colors;
    friend bool operator==(const Anchor&, const Anchor&) = default;
};

struct Instance {
    GraphShape shape;
    ListAssignment lists;
    std::int32_t b = 1;
    std::optional<Anchor> anchor;

    friend bool operator==(const Instance&, const Instance&) = default;
};

// "" when well formed; otherwise one field-precise message ("lists.3: missing").
// Structural validity of tree_of_cycles graphs is checked separately.
std::string instance_error(const Instance& inst);

struct Coloring {
    std::vector<ColorSet> assignment;  // indexed by vertex

    const ColorSet& at(Vertex v) const { return assignment[static_cast<std::size_t>(v)]; }
    friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct Violation {
    std::string rule;   // "missing" | "size" | "list" | "edge" | "anchor"
    Vertex vertex = -1;
    Vertex other = -1;  // edge partner when rule == "edge"
    std::string detail;
};

struct ValidationResult {
    bool ok = false;
    std::vector<Violation> violations;
};

// Checks set sizes, list containment, disjointness across every edge, and the
// anchor assignment when present. Single source of truth for coloring validity.
ValidationResult validate_coloring(const Instance& inst, const Coloring& coloring);

// Smallest even integer >= x; x must be non-negative.
std::int64_t even_ceil(const Rational& x);

// Exact free-choice threshold of the n-cycle: (2*floor(n/2) + 1) / floor(n/2).
Rational fchr_cycle(std::int64_t n);

// Whether every uniform a-list instance of C_n extends from any fixed b-set:
// a*floor(n/2) >= 2*b*floor(n/2) + b, integer arithmetic only.
bool is_guaranteed_cycle(std::int64_t n, std::int64_t a, std::int64_t b);

enum class Outcome { Colored, Infeasible, Unresolved };

struct ThresholdVerdict {
    enum class Rule { CycleRatio, TreeRatio, PathLength };
    Rule rule = Rule::TreeRatio;
    bool met = false;
    // CycleRatio / TreeRatio: required vs. instance ratio (min list size / b).
    Rational required_ratio{0, 1};
    Rational ratio{0, 1};
    // PathLength: required vs. actual path length.
    std::int64_t required_length = 0;
    std::int64_t length = 0;
};

struct SolveReport {
    Outcome outcome = Outcome::Unresolved;
    ThresholdVerdict threshold;
    bool fallback_used = false;       // exact search ran instead of / after the pipeline
    std::int64_t repairs = 0;         // color conflicts repaired while un-renaming
    std::int64_t total_colors = 0;    // distinct colors across the instance lists
    std::uint64_t steps = 0;          // deterministic work counter (pipeline phases)
    std::uint64_t oracle_nodes = 0;   // exact-search nodes, when any ran
    std::optional<Coloring> coloring; // present iff outcome == Colored
    std::string note;
};

}  // namespace fch
