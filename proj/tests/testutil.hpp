#pragma once

// Shared test helpers: seeded generators for random instances, a plain
// backtracking feasibility check kept independent of the production search,
// and a random tree-of-cycles builder with corruption helpers.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "blocktree.hpp"
#include "core.hpp"

namespace testutil {

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed); }

// k distinct colors from {1..universe}
inline fch::ColorSet random_colorset(std::mt19937_64& rng, int k, int universe) {
    std::vector<fch::Color> pool(static_cast<std::size_t>(universe));
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < k; ++i) {
        const auto j = std::uniform_int_distribution<std::size_t>(
            static_cast<std::size_t>(i), pool.size() - 1)(rng);
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    return fch::ColorSet(std::move(pool));
}

inline fch::ColorSet random_subset(std::mt19937_64& rng, const fch::ColorSet& from, int k) {
    std::vector<fch::Color> pool = from.values();
    for (int i = 0; i < k; ++i) {
        const auto j = std::uniform_int_distribution<std::size_t>(
            static_cast<std::size_t>(i), pool.size() - 1)(rng);
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    return fch::ColorSet(std::move(pool));
}

inline fch::ListAssignment random_lists(std::mt19937_64& rng, int count, int a, int universe) {
    fch::ListAssignment lists;
    lists.lists.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) lists.lists.push_back(random_colorset(rng, a, universe));
    return lists;
}

inline fch::Instance random_cycle_instance(std::mt19937_64& rng, int n, int a, int b,
                                           int universe, bool anchored) {
    fch::Instance inst;
    inst.shape = fch::CycleShape{n};
    inst.lists = random_lists(rng, n, a, universe);
    inst.b = b;
    if (anchored) {
        const auto v =
            static_cast<fch::Vertex>(std::uniform_int_distribution<int>(0, n - 1)(rng));
        inst.anchor = fch::Anchor{v, random_subset(rng, inst.lists.at(v), b)};
    }
    return inst;
}

// endpoint lists of size b, interior lists of size a
inline fch::ListAssignment random_path_profile_lists(std::mt19937_64& rng, int n, int a, int b,
                                                     int universe) {
    fch::ListAssignment lists;
    lists.lists.resize(static_cast<std::size_t>(n) + 1);
    lists.lists.front() = random_colorset(rng, b, universe);
    lists.lists.back() = random_colorset(rng, b, universe);
    for (int i = 1; i < n; ++i) {
        lists.lists[static_cast<std::size_t>(i)] = random_colorset(rng, a, universe);
    }
    return lists;
}

// ---- independent feasibility check (plain backtracking, no DP) --------------

namespace detail {

template <typename Fn>
bool each_subset(const std::vector<fch::Color>& vals, int b, Fn&& fn) {
    std::vector<fch::Color> current;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (static_cast<int>(current.size()) == b) return fn(current);
        if (vals.size() - start < static_cast<std::size_t>(b) - current.size()) return false;
        for (std::size_t i = start; i < vals.size(); ++i) {
            current.push_back(vals[i]);
            if (rec(i + 1)) return true;
            current.pop_back();
        }
        return false;
    };
    return rec(0);
}

}  // namespace detail

inline bool naive_feasible(const fch::Instance& inst) {
    const fch::Vertex n = fch::shape_vertex_count(inst.shape);
    std::vector<std::vector<fch::Vertex>> earlier(static_cast<std::size_t>(n));
    for (auto [u, v] : fch::shape_edges(inst.shape)) {
        if (u > v) std::swap(u, v);
        earlier[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<fch::ColorSet> chosen(static_cast<std::size_t>(n));
    std::function<bool(fch::Vertex)> rec = [&](fch::Vertex v) -> bool {
        if (v == n) return true;
        const auto try_set = [&](const std::vector<fch::Color>& colors) {
            const auto set = fch::ColorSet::from_sorted_unique(colors);
            for (const fch::Vertex u : earlier[static_cast<std::size_t>(v)]) {
                if (!set.disjoint_with(chosen[static_cast<std::size_t>(u)])) return false;
            }
            chosen[static_cast<std::size_t>(v)] = set;
            return rec(v + 1);
        };
        if (inst.anchor && inst.anchor->vertex == v) {
            return try_set(inst.anchor->colors.values());
        }
        return detail::each_subset(inst.lists.at(v).values(), inst.b, try_set);
    };
    return rec(0);
}

// ---- random trees of cycles --------------------------------------------------

struct RandomCactus {
    fch::TreeOfCyclesShape shape;
    std::vector<std::vector<fch::Vertex>> cycles;       // ring vertex lists
    std::vector<std::pair<fch::Vertex, fch::Vertex>> bridges;
};

// Grows a tree of cycles with shortest cycle exactly `girth`: the first cycle
// has that length, later cycles are at least as long, and new cycles attach
// only at cycle-free vertices so cycles stay disjoint.
inline RandomCactus random_cactus(std::mt19937_64& rng, int girth, int max_vertices,
                                  int min_cycles = 1) {
    RandomCactus out;
    auto& shape = out.shape;
    shape.vertex_count = 1;
    std::vector<bool> on_cycle{false};

    const auto add_vertex = [&]() {
        shape.vertex_count += 1;
        on_cycle.push_back(false);
        return shape.vertex_count - 1;
    };
    const auto attach_cycle = [&](fch::Vertex at, int length) {
        std::vector<fch::Vertex> ring{at};
        for (int i = 0; i < length - 1; ++i) ring.push_back(add_vertex());
        for (int i = 0; i < length; ++i) {
            shape.edges.emplace_back(ring[static_cast<std::size_t>(i)],
                                     ring[static_cast<std::size_t>((i + 1) % length)]);
        }
        for (const fch::Vertex v : ring) on_cycle[static_cast<std::size_t>(v)] = true;
        out.cycles.push_back(std::move(ring));
    };
    const auto attach_pendant = [&](fch::Vertex at) {
        const fch::Vertex w = add_vertex();
        shape.edges.emplace_back(at, w);
        out.bridges.emplace_back(at, w);
    };

    attach_cycle(0, girth);

    while (shape.vertex_count < max_vertices) {
        const int room = max_vertices - shape.vertex_count;
        const bool need_cycle = static_cast<int>(out.cycles.size()) < min_cycles;
        const bool want_cycle =
            need_cycle || std::uniform_int_distribution<int>(0, 2)(rng) != 0;
        if (want_cycle && room >= girth + 2) {
            // a cycle needs a cycle-free attachment vertex
            std::vector<fch::Vertex> free_vertices;
            for (fch::Vertex v = 0; v < shape.vertex_count; ++v) {
                if (!on_cycle[static_cast<std::size_t>(v)]) free_vertices.push_back(v);
            }
            if (free_vertices.empty()) {
                attach_pendant(static_cast<fch::Vertex>(std::uniform_int_distribution<int>(
                    0, shape.vertex_count - 1)(rng)));
                continue;
            }
            const fch::Vertex at = free_vertices[std::uniform_int_distribution<std::size_t>(
                0, free_vertices.size() - 1)(rng)];
            const int extra = std::min(room - girth + 1, 3);
            const int length = girth + std::uniform_int_distribution<int>(0, extra - 1)(rng);
            attach_cycle(at, length);
        } else {
            attach_pendant(static_cast<fch::Vertex>(
                std::uniform_int_distribution<int>(0, shape.vertex_count - 1)(rng)));
        }
        if (static_cast<int>(out.cycles.size()) >= min_cycles &&
            std::uniform_int_distribution<int>(0, 4)(rng) == 0) {
            break;
        }
    }
    if (out.bridges.empty() && shape.vertex_count < max_vertices) {
        attach_pendant(0);
    }
    return out;
}

// corrupted variant: an extra edge across one cycle
inline fch::TreeOfCyclesShape with_chord(const RandomCactus& cactus, std::mt19937_64& rng) {
    fch::TreeOfCyclesShape shape = cactus.shape;
    const auto& ring = cactus.cycles[std::uniform_int_distribution<std::size_t>(
        0, cactus.cycles.size() - 1)(rng)];
    shape.edges.emplace_back(ring[0], ring[2 % ring.size()]);
    return shape;
}

// corrupted variant: two disjoint cycles forced to share a vertex (the second
// cycle's vertex is merged into the first cycle's, ids compacted)
inline fch::TreeOfCyclesShape with_merged_cycles(const RandomCactus& cactus,
                                                 std::mt19937_64& rng) {
    fch::TreeOfCyclesShape shape = cactus.shape;
    const auto& c1 = cactus.cycles[0];
    const auto& c2 = cactus.cycles[1];
    const fch::Vertex keep =
        c1[std::uniform_int_distribution<std::size_t>(0, c1.size() - 1)(rng)];
    const auto adjacent = [&](fch::Vertex u, fch::Vertex v) {
        return std::any_of(shape.edges.begin(), shape.edges.end(), [&](const auto& e) {
            return (e.first == u && e.second == v) || (e.first == v && e.second == u);
        });
    };
    fch::Vertex drop = c2[0];
    for (const fch::Vertex cand : c2) {
        if (!adjacent(keep, cand)) {
            drop = cand;
            break;
        }
    }
    for (auto& [u, v] : shape.edges) {
        if (u == drop) u = keep;
        if (v == drop) v = keep;
    }
    // fill the vacated id with the last vertex
    const fch::Vertex last = shape.vertex_count - 1;
    if (drop != last) {
        for (auto& [u, v] : shape.edges) {
            if (u == last) u = drop;
            if (v == last) v = drop;
        }
    }
    shape.vertex_count -= 1;
    return shape;
}

// corrupted variant: one bridge removed, disconnecting the graph
inline fch::TreeOfCyclesShape with_missing_bridge(const RandomCactus& cactus,
                                                  std::mt19937_64& rng) {
    fch::TreeOfCyclesShape shape = cactus.shape;
    const auto bridge = cactus.bridges[std::uniform_int_distribution<std::size_t>(
        0, cactus.bridges.size() - 1)(rng)];
    shape.edges.erase(std::remove(shape.edges.begin(), shape.edges.end(), bridge),
                      shape.edges.end());
    return shape;
}

inline fch::Instance random_cactus_instance(std::mt19937_64& rng, const RandomCactus& cactus,
                                            int a, int b, int universe) {
    fch::Instance inst;
    inst.shape = cactus.shape;
    inst.lists = random_lists(rng, cactus.shape.vertex_count, a, universe);
    inst.b = b;
    const auto v = static_cast<fch::Vertex>(
        std::uniform_int_distribution<int>(0, cactus.shape.vertex_count - 1)(rng));
    inst.anchor = fch::Anchor{v, random_subset(rng, inst.lists.at(v), b)};
    return inst;
}

}  // namespace testutil
