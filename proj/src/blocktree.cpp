#include "blocktree.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fch {

namespace {

std::string vertex_list(const std::vector<Vertex>& vs) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out << ',';
        out << vs[i];
    }
    out << '}';
    return out.str();
}

TreeOfCyclesCheck reject(std::string message) {
    TreeOfCyclesCheck c;
    c.error = std::move(message);
    return c;
}

// Ring order of a connected 2-regular vertex set, starting at its smallest
// vertex, second vertex chosen as the smaller neighbor.
std::vector<Vertex> extract_ring(const std::vector<Vertex>& verts,
                                 const std::vector<std::vector<Vertex>>& adj_in_block) {
    const Vertex start = *std::min_element(verts.begin(), verts.end());
    std::vector<Vertex> ring{start};
    Vertex prev = -1;
    Vertex cur = start;
    while (true) {
        const auto& nb = adj_in_block[static_cast<std::size_t>(cur)];
        Vertex next = (nb[0] != prev) ? nb[0] : nb[1];
        if (next == start) break;
        ring.push_back(next);
        prev = cur;
        cur = next;
    }
    return ring;
}

}  // namespace

TreeOfCyclesCheck validate_tree_of_cycles(const GraphShape& shape) {
    const Vertex n = shape_vertex_count(shape);
    const auto edges = shape_edges(shape);

    if (n < 1) return reject("graph: needs at least one vertex");

    std::vector<std::pair<Vertex, Vertex>> normalized;
    normalized.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            return reject("graph.edges: vertex out of range");
        }
        if (u == v) return reject("graph: self-loop at vertex " + std::to_string(u));
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    if (auto it = std::adjacent_find(normalized.begin(), normalized.end());
        it != normalized.end()) {
        return reject("graph: duplicate edge " + std::to_string(it->first) + "-" +
                      std::to_string(it->second));
    }

    // adjacency with edge ids
    std::vector<std::vector<std::pair<Vertex, std::int32_t>>> adj(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < normalized.size(); ++e) {
        const auto [u, v] = normalized[e];
        adj[static_cast<std::size_t>(u)].emplace_back(v, static_cast<std::int32_t>(e));
        adj[static_cast<std::size_t>(v)].emplace_back(u, static_cast<std::int32_t>(e));
    }

    // Iterative biconnected-components DFS (discovery/low-point with an edge stack).
    std::vector<std::int32_t> disc(static_cast<std::size_t>(n), -1);
    std::vector<std::int32_t> low(static_cast<std::size_t>(n), -1);
    std::vector<std::int32_t> edge_stack;
    std::vector<std::vector<std::int32_t>> block_edges;

    struct Frame {
        Vertex v;
        std::int32_t parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    std::int32_t timer = 0;

    disc[0] = low[0] = timer++;
    stack.push_back({0, -1, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nb = adj[static_cast<std::size_t>(f.v)];
        if (f.next < nb.size()) {
            const auto [w, eid] = nb[f.next++];
            if (eid == f.parent_edge) continue;
            if (disc[static_cast<std::size_t>(w)] == -1) {
                edge_stack.push_back(eid);
                disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                stack.push_back({w, eid, 0});
            } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
                edge_stack.push_back(eid);
                low[static_cast<std::size_t>(f.v)] =
                    std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
            }
        } else {
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) break;
            Frame& parent = stack.back();
            low[static_cast<std::size_t>(parent.v)] =
                std::min(low[static_cast<std::size_t>(parent.v)],
                         low[static_cast<std::size_t>(done.v)]);
            if (low[static_cast<std::size_t>(done.v)] >=
                disc[static_cast<std::size_t>(parent.v)]) {
                std::vector<std::int32_t> blk;
                while (!edge_stack.empty() && edge_stack.back() != done.parent_edge) {
                    blk.push_back(edge_stack.back());
                    edge_stack.pop_back();
                }
                if (!edge_stack.empty()) {
                    blk.push_back(edge_stack.back());
                    edge_stack.pop_back();
                }
                block_edges.push_back(std::move(blk));
            }
        }
    }

    for (Vertex v = 0; v < n; ++v) {
        if (disc[static_cast<std::size_t>(v)] == -1) {
            return reject("graph: disconnected (vertex " + std::to_string(v) +
                          " unreachable from vertex 0)");
        }
    }

    BlockTree tree;
    tree.blocks_of_vertex.assign(static_cast<std::size_t>(n), {});

    for (const auto& blk : block_edges) {
        // collect block vertices and in-block degrees
        std::map<Vertex, std::vector<Vertex>> local;
        for (std::int32_t eid : blk) {
            const auto [u, v] = normalized[static_cast<std::size_t>(eid)];
            local[u].push_back(v);
            local[v].push_back(u);
        }
        std::vector<Vertex> verts;
        verts.reserve(local.size());
        for (const auto& [v, _] : local) verts.push_back(v);

        Block block;
        if (blk.size() == 1) {
            block.kind = Block::Kind::Bridge;
            block.vertices = verts;  // two endpoints, ascending
        } else {
            const bool two_regular =
                std::all_of(local.begin(), local.end(),
                            [](const auto& kv) { return kv.second.size() == 2; });
            if (blk.size() != verts.size() || !two_regular) {
                return reject("graph: block " + vertex_list(verts) +
                              " is neither a single edge nor a chordless cycle");
            }
            std::vector<std::vector<Vertex>> adj_in_block(static_cast<std::size_t>(n));
            for (const auto& [v, nbrs] : local) {
                auto sorted = nbrs;
                std::sort(sorted.begin(), sorted.end());
                adj_in_block[static_cast<std::size_t>(v)] = sorted;
            }
            block.kind = Block::Kind::Cycle;
            block.vertices = extract_ring(verts, adj_in_block);
        }
        tree.blocks.push_back(std::move(block));
    }

    // Disjointness: no vertex on two cycle blocks.
    std::vector<std::int32_t> cycles_at(static_cast<std::size_t>(n), 0);
    for (std::size_t bi = 0; bi < tree.blocks.size(); ++bi) {
        const Block& blk = tree.blocks[bi];
        for (Vertex v : blk.vertices) {
            tree.blocks_of_vertex[static_cast<std::size_t>(v)].push_back(
                static_cast<std::int32_t>(bi));
            if (blk.kind == Block::Kind::Cycle) {
                if (++cycles_at[static_cast<std::size_t>(v)] > 1) {
                    return reject("graph: cycles are not disjoint (vertex " +
                                  std::to_string(v) + " lies on two cycles)");
                }
            }
        }
    }

    for (const Block& blk : tree.blocks) {
        if (blk.kind == Block::Kind::Cycle) {
            const Vertex len = static_cast<Vertex>(blk.vertices.size());
            tree.girth = tree.girth ? std::min(*tree.girth, len) : len;
        }
    }

    TreeOfCyclesCheck check;
    check.tree = std::move(tree);
    return check;
}

}  // namespace fch
