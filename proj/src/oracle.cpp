#include "oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>
#include <vector>

#include "blocktree.hpp"

namespace fch::oracle {

namespace {

// Backtracking over blocks is exponential in the worst case; beyond this many
// vertices a tree-of-cycles instance is refused outright.
constexpr Vertex kTreeVertexLimit = 64;

struct NodeCounter {
    std::uint64_t nodes = 0;
    std::uint64_t budget = kDefaultBudget;

    void spend(std::uint64_t k = 1) {
        nodes += k;
        if (nodes > budget) throw BudgetError(nodes);
    }
};

// Calls fn once per b-subset of vals, in lexicographic order, until fn returns
// true. Returns whether any call did.
template <typename Fn>
bool for_each_subset(const std::vector<Color>& vals, std::int32_t b, NodeCounter& counter,
                     Fn&& fn) {
    const std::size_t m = vals.size();
    const std::size_t k = static_cast<std::size_t>(b);
    if (m < k) return false;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<Color> subset(k);
    while (true) {
        counter.spend();
        for (std::size_t i = 0; i < k; ++i) subset[i] = vals[idx[i]];
        if (fn(subset)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

struct Universe {
    std::vector<Color> colors;  // sorted unique
    std::size_t words = 1;

    std::size_t index(Color c) const {
        return static_cast<std::size_t>(
            std::lower_bound(colors.begin(), colors.end(), c) - colors.begin());
    }
};

Universe make_universe(const std::vector<const ColorSet*>& lists) {
    Universe u;
    for (const ColorSet* l : lists) {
        u.colors.insert(u.colors.end(), l->values().begin(), l->values().end());
    }
    std::sort(u.colors.begin(), u.colors.end());
    u.colors.erase(std::unique(u.colors.begin(), u.colors.end()), u.colors.end());
    u.words = std::max<std::size_t>(1, (u.colors.size() + 63) / 64);
    return u;
}

// Candidate b-subsets of one position, flat storage.
struct StateTable {
    std::size_t count = 0;
    std::size_t words = 1;
    std::int32_t b = 0;
    std::vector<std::uint64_t> masks;  // count * words
    std::vector<Color> colors;         // count * b

    const std::uint64_t* mask(std::size_t s) const { return masks.data() + s * words; }

    ColorSet state_set(std::size_t s) const {
        const std::size_t k = static_cast<std::size_t>(b);
        return ColorSet::from_sorted_unique(
            std::vector<Color>(colors.begin() + static_cast<std::ptrdiff_t>(s * k),
                               colors.begin() + static_cast<std::ptrdiff_t>((s + 1) * k)));
    }
};

bool masks_disjoint(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) {
        if (a[i] & b[i]) return false;
    }
    return true;
}

void add_state(StateTable& t, const std::vector<Color>& subset, const Universe& u) {
    const std::size_t base = t.masks.size();
    t.masks.resize(base + t.words, 0);
    for (Color c : subset) {
        const std::size_t i = u.index(c);
        t.masks[base + i / 64] |= std::uint64_t{1} << (i % 64);
    }
    t.colors.insert(t.colors.end(), subset.begin(), subset.end());
    ++t.count;
}

StateTable build_states(const ColorSet& list, std::int32_t b, const ColorSet* pinned,
                        const Universe& u, NodeCounter& counter) {
    StateTable t;
    t.words = u.words;
    t.b = b;
    if (pinned) {
        counter.spend();
        add_state(t, pinned->values(), u);
        return t;
    }
    for_each_subset(list.values(), b, counter, [&](const std::vector<Color>& subset) {
        add_state(t, subset, u);
        return false;
    });
    return t;
}

// Forward reachability over adjacent-disjoint states; reconstructs the
// lexicographically first feasible chain. closing_mask, when given, must also
// be disjoint from the final state (ring closure).
std::optional<std::vector<std::size_t>> chain_dp(const std::vector<const StateTable*>& tables,
                                                 const std::uint64_t* closing_mask,
                                                 NodeCounter& counter) {
    const std::size_t k = tables.size();
    std::vector<std::vector<std::int32_t>> parent(k);
    if (tables[0]->count == 0) return std::nullopt;
    parent[0].assign(tables[0]->count, -2);
    for (std::size_t i = 1; i < k; ++i) {
        parent[i].assign(tables[i]->count, -1);
        const std::size_t words = tables[i]->words;
        for (std::size_t s = 0; s < tables[i]->count; ++s) {
            for (std::size_t t = 0; t < tables[i - 1]->count; ++t) {
                if (parent[i - 1][t] == -1) continue;
                counter.spend();
                if (masks_disjoint(tables[i]->mask(s), tables[i - 1]->mask(t), words)) {
                    parent[i][s] = static_cast<std::int32_t>(t);
                    break;
                }
            }
        }
    }
    const std::size_t last = k - 1;
    for (std::size_t s = 0; s < tables[last]->count; ++s) {
        if (parent[last][s] == -1) continue;
        if (closing_mask) {
            counter.spend();
            if (!masks_disjoint(tables[last]->mask(s), closing_mask, tables[last]->words)) {
                continue;
            }
        }
        std::vector<std::size_t> chosen(k);
        std::size_t cur = s;
        for (std::size_t i = k; i-- > 0;) {
            chosen[i] = cur;
            if (i > 0) cur = static_cast<std::size_t>(parent[i][cur]);
        }
        return chosen;
    }
    return std::nullopt;
}

// Open chain of lists; pins[i] (nullable) fixes position i.
std::optional<std::vector<ColorSet>> chain_solve(const std::vector<const ColorSet*>& lists,
                                                 const std::vector<const ColorSet*>& pins,
                                                 std::int32_t b, NodeCounter& counter) {
    const Universe u = make_universe(lists);
    std::vector<StateTable> tables(lists.size());
    std::vector<const StateTable*> view(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) {
        tables[i] = build_states(*lists[i], b, pins[i], u, counter);
        view[i] = &tables[i];
    }
    auto chosen = chain_dp(view, nullptr, counter);
    if (!chosen) return std::nullopt;
    std::vector<ColorSet> out(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) out[i] = tables[i].state_set((*chosen)[i]);
    return out;
}

// Closed ring of lists; pin, when given, fixes position 0, otherwise every
// candidate start is tried in lexicographic order.
std::optional<std::vector<ColorSet>> ring_dp(const std::vector<const ColorSet*>& lists,
                                             const ColorSet* pin, std::int32_t b,
                                             NodeCounter& counter) {
    const std::size_t len = lists.size();
    const Universe u = make_universe(lists);
    std::vector<StateTable> tables(len);
    std::vector<const StateTable*> view(len);
    for (std::size_t i = 1; i < len; ++i) {
        tables[i] = build_states(*lists[i], b, nullptr, u, counter);
        view[i] = &tables[i];
    }
    tables[0] = build_states(*lists[0], b, pin, u, counter);

    StateTable start;
    start.words = u.words;
    start.b = b;
    view[0] = &start;
    for (std::size_t s0 = 0; s0 < tables[0].count; ++s0) {
        start.count = 1;
        start.masks.assign(tables[0].mask(s0), tables[0].mask(s0) + u.words);
        const std::size_t k = static_cast<std::size_t>(b);
        start.colors.assign(tables[0].colors.begin() + static_cast<std::ptrdiff_t>(s0 * k),
                            tables[0].colors.begin() + static_cast<std::ptrdiff_t>((s0 + 1) * k));
        auto chosen = chain_dp(view, start.mask(0), counter);
        if (chosen) {
            std::vector<ColorSet> out(len);
            out[0] = start.state_set(0);
            for (std::size_t i = 1; i < len; ++i) out[i] = tables[i].state_set((*chosen)[i]);
            return out;
        }
    }
    return std::nullopt;
}

OracleResult path_feasible(const Instance& inst, const PathShape& shape, NodeCounter& counter) {
    const Vertex n = shape.length;
    std::vector<const ColorSet*> lists(static_cast<std::size_t>(n) + 1);
    std::vector<const ColorSet*> pins(static_cast<std::size_t>(n) + 1, nullptr);
    for (Vertex i = 0; i <= n; ++i) lists[static_cast<std::size_t>(i)] = &inst.lists.at(i);
    if (inst.anchor) pins[static_cast<std::size_t>(inst.anchor->vertex)] = &inst.anchor->colors;

    OracleResult result;
    auto sets = chain_solve(lists, pins, inst.b, counter);
    result.feasible = sets.has_value();
    if (sets) result.witness = Coloring{std::move(*sets)};
    return result;
}

OracleResult cycle_feasible(const Instance& inst, const CycleShape& shape, NodeCounter& counter) {
    const Vertex n = shape.length;
    const Vertex start = inst.anchor ? inst.anchor->vertex : 0;
    std::vector<const ColorSet*> lists(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) {
        lists[static_cast<std::size_t>(i)] = &inst.lists.at((start + i) % n);
    }
    OracleResult result;
    auto sets = ring_dp(lists, inst.anchor ? &inst.anchor->colors : nullptr, inst.b, counter);
    result.feasible = sets.has_value();
    if (sets) {
        std::vector<ColorSet> by_vertex(static_cast<std::size_t>(n));
        for (Vertex i = 0; i < n; ++i) {
            by_vertex[static_cast<std::size_t>((start + i) % n)] = std::move((*sets)[static_cast<std::size_t>(i)]);
        }
        result.witness = Coloring{std::move(by_vertex)};
    }
    return result;
}

struct TreeSearch {
    const Instance& inst;
    const BlockTree& tree;
    NodeCounter& counter;
    std::vector<std::optional<ColorSet>> assigned;
    // blocks in visit order, each entered through an already-colored vertex
    std::vector<std::pair<std::int32_t, Vertex>> order;

    TreeSearch(const Instance& instance, const BlockTree& block_tree, Vertex root,
               NodeCounter& node_counter)
        : inst(instance), tree(block_tree), counter(node_counter) {
        const Vertex n = shape_vertex_count(inst.shape);
        assigned.assign(static_cast<std::size_t>(n), std::nullopt);
        std::vector<bool> seen(tree.blocks.size(), false);
        std::vector<std::pair<std::int32_t, Vertex>> queue;
        for (std::int32_t bi : tree.blocks_of_vertex[static_cast<std::size_t>(root)]) {
            seen[static_cast<std::size_t>(bi)] = true;
            queue.emplace_back(bi, root);
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto [bi, entry] = queue[head];
            order.emplace_back(bi, entry);
            for (Vertex w : tree.blocks[static_cast<std::size_t>(bi)].vertices) {
                if (w == entry) continue;
                for (std::int32_t bj : tree.blocks_of_vertex[static_cast<std::size_t>(w)]) {
                    if (!seen[static_cast<std::size_t>(bj)]) {
                        seen[static_cast<std::size_t>(bj)] = true;
                        queue.emplace_back(bj, w);
                    }
                }
            }
        }
    }

    bool vertex_is_private(Vertex v) const {
        return tree.blocks_of_vertex[static_cast<std::size_t>(v)].size() == 1;
    }

    bool block_is_leaf(const Block& blk, Vertex entry) const {
        for (Vertex w : blk.vertices) {
            if (w != entry && !vertex_is_private(w)) return false;
        }
        return true;
    }

    bool solve_from(std::size_t bi) {
        if (bi == order.size()) return true;
        const auto [block_idx, entry] = order[bi];
        const Block& blk = tree.blocks[static_cast<std::size_t>(block_idx)];
        if (blk.kind == Block::Kind::Bridge) {
            const Vertex other = blk.vertices[0] == entry ? blk.vertices[1] : blk.vertices[0];
            const ColorSet avail = inst.lists.at(other).set_minus(*assigned[static_cast<std::size_t>(entry)]);
            if (block_is_leaf(blk, entry)) {
                if (avail.size() < static_cast<std::size_t>(inst.b)) return false;
                counter.spend();
                assigned[static_cast<std::size_t>(other)] = avail.first(static_cast<std::size_t>(inst.b));
                if (solve_from(bi + 1)) return true;
                assigned[static_cast<std::size_t>(other)].reset();
                return false;
            }
            const bool found =
                for_each_subset(avail.values(), inst.b, counter, [&](const std::vector<Color>& cand) {
                    assigned[static_cast<std::size_t>(other)] =
                        ColorSet::from_sorted_unique(cand);
                    return solve_from(bi + 1);
                });
            if (!found) assigned[static_cast<std::size_t>(other)].reset();
            return found;
        }

        // cycle block, rotate the ring so the entry vertex is position 0
        std::vector<Vertex> ring = blk.vertices;
        const auto at = std::find(ring.begin(), ring.end(), entry);
        std::rotate(ring.begin(), at, ring.end());
        const std::size_t len = ring.size();
        std::vector<const ColorSet*> ring_lists(len);
        for (std::size_t i = 0; i < len; ++i) ring_lists[i] = &inst.lists.at(ring[i]);

        if (block_is_leaf(blk, entry)) {
            auto sets = ring_dp(ring_lists, &*assigned[static_cast<std::size_t>(entry)], inst.b,
                                counter);
            if (!sets) return false;
            for (std::size_t i = 1; i < len; ++i) {
                assigned[static_cast<std::size_t>(ring[i])] = std::move((*sets)[i]);
            }
            if (solve_from(bi + 1)) return true;
            for (std::size_t i = 1; i < len; ++i) assigned[static_cast<std::size_t>(ring[i])].reset();
            return false;
        }
        return ring_backtrack(ring, 1, bi);
    }

    bool ring_backtrack(const std::vector<Vertex>& ring, std::size_t pos, std::size_t bi) {
        if (pos == ring.size()) return solve_from(bi + 1);
        ColorSet avail =
            inst.lists.at(ring[pos]).set_minus(*assigned[static_cast<std::size_t>(ring[pos - 1])]);
        if (pos + 1 == ring.size()) {
            avail = avail.set_minus(*assigned[static_cast<std::size_t>(ring[0])]);
        }
        const bool found =
            for_each_subset(avail.values(), inst.b, counter, [&](const std::vector<Color>& cand) {
                assigned[static_cast<std::size_t>(ring[pos])] = ColorSet::from_sorted_unique(cand);
                return ring_backtrack(ring, pos + 1, bi);
            });
        if (!found) assigned[static_cast<std::size_t>(ring[pos])].reset();
        return found;
    }
};

OracleResult tree_feasible(const Instance& inst, NodeCounter& counter) {
    const Vertex n = shape_vertex_count(inst.shape);
    if (n > kTreeVertexLimit) {
        throw std::invalid_argument("oracle: tree-of-cycles exact search is limited to " +
                                    std::to_string(kTreeVertexLimit) + " vertices, got " +
                                    std::to_string(n));
    }
    auto check = validate_tree_of_cycles(inst.shape);
    if (!check.tree) throw std::invalid_argument("oracle: " + check.error);
    const BlockTree& tree = *check.tree;

    const Vertex root = inst.anchor ? inst.anchor->vertex : 0;
    TreeSearch search(inst, tree, root, counter);

    OracleResult result;
    auto run_with_root = [&](const ColorSet& root_set) {
        search.assigned[static_cast<std::size_t>(root)] = root_set;
        if (search.solve_from(0)) return true;
        search.assigned[static_cast<std::size_t>(root)].reset();
        return false;
    };

    bool found = false;
    if (inst.anchor) {
        counter.spend();
        found = run_with_root(inst.anchor->colors);
    } else {
        found = for_each_subset(inst.lists.at(root).values(), inst.b, counter,
                                [&](const std::vector<Color>& cand) {
                                    return run_with_root(ColorSet::from_sorted_unique(cand));
                                });
    }
    result.feasible = found;
    if (found) {
        std::vector<ColorSet> by_vertex(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) by_vertex[static_cast<std::size_t>(v)] = *search.assigned[static_cast<std::size_t>(v)];
        result.witness = Coloring{std::move(by_vertex)};
    }
    return result;
}

}  // namespace

OracleResult feasible(const Instance& inst, std::uint64_t budget) {
    if (const std::string err = instance_error(inst); !err.empty()) {
        throw std::invalid_argument("oracle: " + err);
    }
    NodeCounter counter;
    counter.budget = budget;

    OracleResult result;
    if (const auto* path = std::get_if<PathShape>(&inst.shape)) {
        result = path_feasible(inst, *path, counter);
    } else if (const auto* cycle = std::get_if<CycleShape>(&inst.shape)) {
        result = cycle_feasible(inst, *cycle, counter);
    } else {
        result = tree_feasible(inst, counter);
    }
    result.nodes = counter.nodes;
    assert(!result.feasible || validate_coloring(inst, *result.witness).ok);
    return result;
}

FreeCheckResult free_check_list(const Instance& inst, Vertex v, std::uint64_t budget) {
    if (inst.anchor) {
        throw std::invalid_argument("free_check_list: instance already carries an anchor");
    }
    const Vertex n = shape_vertex_count(inst.shape);
    if (v < 0 || v >= n) throw std::invalid_argument("free_check_list: vertex out of range");
    if (inst.lists.at(v).size() < static_cast<std::size_t>(inst.b)) {
        throw std::invalid_argument("free_check_list: |L(v)| < b, no b-subset to fix");
    }

    FreeCheckResult out;
    NodeCounter enumerator;  // enumeration itself is cheap; budget applies per feasibility call
    enumerator.budget = kDefaultBudget;
    const bool failed = for_each_subset(
        inst.lists.at(v).values(), inst.b, enumerator, [&](const std::vector<Color>& cand) {
            Instance anchored = inst;
            anchored.anchor = Anchor{v, ColorSet::from_sorted_unique(cand)};
            ++out.anchors_checked;
            const OracleResult r = feasible(anchored, budget);
            out.nodes += r.nodes;
            if (!r.feasible) {
                out.failing_anchor = ColorSet::from_sorted_unique(cand);
                return true;
            }
            return false;
        });
    out.all_extendable = !failed;
    return out;
}

}  // namespace fch::oracle
