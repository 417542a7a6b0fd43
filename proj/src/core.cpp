#include "core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fch {

namespace {

std::string join_colors(const std::vector<Color>& colors) {
    std::ostringstream out;
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (i) out << ',';
        out << colors[i];
    }
    return out.str();
}

}  // namespace

ColorSet::ColorSet(std::vector<Color> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    if (!values_.empty() && values_.front() < 0) {
        throw std::invalid_argument("ColorSet: negative color identifier");
    }
    if (std::adjacent_find(values_.begin(), values_.end()) != values_.end()) {
        throw std::invalid_argument("ColorSet: duplicate color identifier");
    }
}

ColorSet ColorSet::from_sorted_unique(std::vector<Color> values) {
    ColorSet s;
    s.values_ = std::move(values);
    return s;
}

bool ColorSet::contains(Color c) const {
    return std::binary_search(values_.begin(), values_.end(), c);
}

bool ColorSet::subset_of(const ColorSet& other) const {
    return std::includes(other.values_.begin(), other.values_.end(), values_.begin(),
                         values_.end());
}

bool ColorSet::disjoint_with(const ColorSet& other) const {
    auto a = values_.begin();
    auto b = other.values_.begin();
    while (a != values_.end() && b != other.values_.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            return false;
        }
    }
    return true;
}

ColorSet ColorSet::set_minus(const ColorSet& other) const {
    std::vector<Color> out;
    std::set_difference(values_.begin(), values_.end(), other.values_.begin(),
                        other.values_.end(), std::back_inserter(out));
    return from_sorted_unique(std::move(out));
}

ColorSet ColorSet::intersect(const ColorSet& other) const {
    std::vector<Color> out;
    std::set_intersection(values_.begin(), values_.end(), other.values_.begin(),
                          other.values_.end(), std::back_inserter(out));
    return from_sorted_unique(std::move(out));
}

ColorSet ColorSet::first(std::size_t k) const {
    if (k > values_.size()) {
        throw std::invalid_argument("ColorSet::first: k exceeds set size");
    }
    return from_sorted_unique(std::vector<Color>(values_.begin(), values_.begin() + k));
}

std::size_t ListAssignment::min_list_size() const {
    std::size_t m = lists.empty() ? 0 : lists.front().size();
    for (const auto& l : lists) m = std::min(m, l.size());
    return m;
}

std::optional<std::size_t> ListAssignment::uniform_size() const {
    if (lists.empty()) return std::nullopt;
    const std::size_t a = lists.front().size();
    for (const auto& l : lists) {
        if (l.size() != a) return std::nullopt;
    }
    return a;
}

std::int64_t ListAssignment::total_colors() const {
    std::vector<Color> all;
    for (const auto& l : lists) {
        all.insert(all.end(), l.values().begin(), l.values().end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return static_cast<std::int64_t>(all.size());
}

Vertex shape_vertex_count(const GraphShape& shape) {
    return std::visit(
        [](const auto& s) -> Vertex {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathShape>) {
                return s.length + 1;
            } else if constexpr (std::is_same_v<T, CycleShape>) {
                return s.length;
            } else {
                return s.vertex_count;
            }
        },
        shape);
}

std::vector<std::pair<Vertex, Vertex>> shape_edges(const GraphShape& shape) {
    return std::visit(
        [](const auto& s) -> std::vector<std::pair<Vertex, Vertex>> {
            using T = std::decay_t<decltype(s)>;
            std::vector<std::pair<Vertex, Vertex>> edges;
            if constexpr (std::is_same_v<T, PathShape>) {
                for (Vertex i = 0; i < s.length; ++i) edges.emplace_back(i, i + 1);
            } else if constexpr (std::is_same_v<T, CycleShape>) {
                for (Vertex i = 0; i < s.length; ++i) edges.emplace_back(i, (i + 1) % s.length);
            } else {
                edges = s.edges;
            }
            return edges;
        },
        shape);
}

std::string instance_error(const Instance& inst) {
    if (inst.b < 1) return "b: must be a positive integer";

    if (const auto* path = std::get_if<PathShape>(&inst.shape)) {
        if (path->length < 0) return "graph.n: path length must be non-negative";
    } else if (const auto* cycle = std::get_if<CycleShape>(&inst.shape)) {
        if (cycle->length < 3) return "graph.n: cycle length must be at least 3";
    } else {
        const auto& t = std::get<TreeOfCyclesShape>(inst.shape);
        if (t.vertex_count < 1) return "graph.vertices: must be positive";
        for (std::size_t i = 0; i < t.edges.size(); ++i) {
            const auto [u, v] = t.edges[i];
            if (u < 0 || u >= t.vertex_count || v < 0 || v >= t.vertex_count) {
                return "graph.edges[" + std::to_string(i) + "]: vertex out of range";
            }
        }
    }

    const Vertex n = shape_vertex_count(inst.shape);
    if (static_cast<Vertex>(inst.lists.size()) != n) {
        const Vertex have = static_cast<Vertex>(inst.lists.size());
        if (have < n) return "lists." + std::to_string(have) + ": missing list for vertex";
        return "lists: has " + std::to_string(have) + " entries but the graph has " +
               std::to_string(n) + " vertices";
    }

    if (inst.anchor) {
        const auto& a = *inst.anchor;
        if (a.vertex < 0 || a.vertex >= n) return "anchor.vertex: out of range";
        if (static_cast<std::int32_t>(a.colors.size()) != inst.b) {
            return "anchor.colors: expected exactly b=" + std::to_string(inst.b) +
                   " colors, got " + std::to_string(a.colors.size());
        }
        if (!a.colors.subset_of(inst.lists.at(a.vertex))) {
            return "anchor.colors: not a subset of lists." + std::to_string(a.vertex);
        }
    }
    return "";
}

ValidationResult validate_coloring(const Instance& inst, const Coloring& coloring) {
    ValidationResult result;
    const Vertex n = shape_vertex_count(inst.shape);

    if (static_cast<Vertex>(coloring.assignment.size()) != n) {
        Violation v;
        v.rule = "missing";
        v.vertex = static_cast<Vertex>(
            std::min<std::size_t>(coloring.assignment.size(), static_cast<std::size_t>(n)));
        v.detail = "coloring has " + std::to_string(coloring.assignment.size()) +
                   " entries but the graph has " + std::to_string(n) + " vertices";
        result.violations.push_back(std::move(v));
        result.ok = false;
        return result;
    }

    for (Vertex i = 0; i < n; ++i) {
        const ColorSet& c = coloring.at(i);
        if (static_cast<std::int32_t>(c.size()) != inst.b) {
            Violation v;
            v.rule = "size";
            v.vertex = i;
            v.detail = "vertex " + std::to_string(i) + " has " + std::to_string(c.size()) +
                       " colors, expected " + std::to_string(inst.b);
            result.violations.push_back(std::move(v));
        }
        if (!c.subset_of(inst.lists.at(i))) {
            Violation v;
            v.rule = "list";
            v.vertex = i;
            v.detail = "vertex " + std::to_string(i) + " uses colors outside its list";
            result.violations.push_back(std::move(v));
        }
    }

    for (const auto& [u, w] : shape_edges(inst.shape)) {
        const ColorSet shared = coloring.at(u).intersect(coloring.at(w));
        if (!shared.empty()) {
            Violation v;
            v.rule = "edge";
            v.vertex = u;
            v.other = w;
            v.detail = "edge " + std::to_string(u) + "-" + std::to_string(w) +
                       " shares colors {" + join_colors(shared.values()) + "}";
            result.violations.push_back(std::move(v));
        }
    }

    if (inst.anchor && !(coloring.at(inst.anchor->vertex) == inst.anchor->colors)) {
        Violation v;
        v.rule = "anchor";
        v.vertex = inst.anchor->vertex;
        v.detail = "vertex " + std::to_string(inst.anchor->vertex) +
                   " does not carry the anchored color set";
        result.violations.push_back(std::move(v));
    }

    result.ok = result.violations.empty();
    return result;
}

std::int64_t even_ceil(const Rational& x) {
    if (x.num() < 0) throw std::invalid_argument("even_ceil: negative input");
    // smallest even p with p >= num/den, i.e. 2*ceil(num / (2*den))
    const std::int64_t num = x.num();
    const std::int64_t den2 = 2 * x.den();
    return 2 * ((num + den2 - 1) / den2);
}

Rational fchr_cycle(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("fchr_cycle: cycle length must be at least 3");
    const std::int64_t k = n / 2;
    return Rational(2 * k + 1, k);
}

bool is_guaranteed_cycle(std::int64_t n, std::int64_t a, std::int64_t b) {
    const std::int64_t k = n / 2;
    return a * k >= 2 * b * k + b;
}

}  // namespace fch
