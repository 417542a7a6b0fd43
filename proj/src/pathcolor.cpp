#include "pathcolor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fch::pathcolor {

namespace {

Color lookup_original(const std::vector<std::pair<Color, Color>>& log, Color renamed) {
    for (const auto& [from, to] : log) {
        if (from == renamed) return to;
    }
    return renamed;
}

}  // namespace

WaterfallList waterfallize(const ListAssignment& lists) {
    const std::size_t k = lists.size();

    std::map<Color, std::vector<std::size_t>> occurrences;  // color -> positions, ascending
    Color max_color = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (Color c : lists.lists[i]) {
            occurrences[c].push_back(i);
            max_color = std::max(max_color, c);
        }
    }

    // per-vertex original -> renamed
    std::vector<std::map<Color, Color>> rename_at(k);
    WaterfallList out;
    out.rename_log.assign(k, {});

    Color fresh = max_color + 1;
    for (const auto& [color, positions] : occurrences) {
        bool first_group = true;
        std::size_t j = 0;
        while (j < positions.size()) {
            // a group is one position, or two adjacent ones
            std::size_t group_end = j + 1;
            if (group_end < positions.size() && positions[group_end] == positions[j] + 1) {
                ++group_end;
            }
            if (!first_group) {
                const Color renamed = fresh++;
                for (std::size_t g = j; g < group_end; ++g) {
                    rename_at[positions[g]][color] = renamed;
                    out.rename_log[positions[g]].emplace_back(renamed, color);
                }
            }
            first_group = false;
            j = group_end;
        }
    }

    out.lists.lists.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Color> renamed;
        renamed.reserve(lists.lists[i].size());
        for (Color c : lists.lists[i]) {
            const auto it = rename_at[i].find(c);
            renamed.push_back(it == rename_at[i].end() ? c : it->second);
        }
        std::sort(renamed.begin(), renamed.end());
        out.lists.lists[i] = ColorSet::from_sorted_unique(std::move(renamed));
    }
    return out;
}

GreedyResult greedy_forward(const WaterfallList& wl, std::int32_t b, bool end_fixed) {
    const std::size_t k = wl.lists.size();
    GreedyResult result;
    if (k == 0 || b < 0) return result;

    const std::size_t bs = static_cast<std::size_t>(b);
    const Vertex n = static_cast<Vertex>(k) - 1;
    if (wl.lists.at(0).size() != bs && b > 0) {
        throw std::invalid_argument("greedy_forward: vertex 0 list must have exactly b colors");
    }
    if (end_fixed && n > 0 && wl.lists.at(n).size() != bs && b > 0) {
        throw std::invalid_argument("greedy_forward: final list must have exactly b colors");
    }

    std::vector<ColorSet> c(k);
    c[0] = b > 0 ? wl.lists.at(0) : ColorSet{};
    const Vertex last_free = end_fixed ? n - 1 : n;
    for (Vertex i = 1; i <= last_free; ++i) {
        ColorSet avail = wl.lists.at(i).set_minus(c[static_cast<std::size_t>(i) - 1]);
        if (end_fixed && i == n - 1) {
            avail = avail.set_minus(wl.lists.at(n));
        }
        if (avail.size() < bs) {
            result.failed_at = i;
            return result;
        }
        c[static_cast<std::size_t>(i)] = avail.first(bs);
    }
    if (end_fixed && n > 0) {
        c[static_cast<std::size_t>(n)] = b > 0 ? wl.lists.at(n) : ColorSet{};
        // only vertex n-1 was steered away from L(n); n == 1 leaves both ends forced
        if (!c[static_cast<std::size_t>(n)].disjoint_with(c[static_cast<std::size_t>(n) - 1])) {
            result.failed_at = n;
            return result;
        }
    }
    result.coloring = Coloring{std::move(c)};
    return result;
}

std::optional<Coloring> dewaterfallize(const Coloring& renamed, const WaterfallList& wl,
                                       const ListAssignment& original, std::int64_t* repairs) {
    const std::size_t k = renamed.assignment.size();
    std::vector<ColorSet> c(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Color> back;
        back.reserve(renamed.assignment[i].size());
        for (Color x : renamed.assignment[i]) {
            back.push_back(lookup_original(wl.rename_log[i], x));
        }
        std::sort(back.begin(), back.end());
        c[i] = ColorSet::from_sorted_unique(std::move(back));
    }

    for (std::size_t i = 0; i + 1 < k; ++i) {
        while (true) {
            const ColorSet shared = c[i].intersect(c[i + 1]);
            if (shared.empty()) break;
            const Color conflict = *shared.begin();
            const std::size_t v =
                original.lists[i + 1].size() >= original.lists[i].size() ? i + 1 : i;
            // colors unavailable as substitutes: current sets of v and both neighbors
            ColorSet unavailable = c[v];
            if (v > 0) {
                std::vector<Color> merged;
                std::set_union(unavailable.begin(), unavailable.end(), c[v - 1].begin(),
                               c[v - 1].end(), std::back_inserter(merged));
                unavailable = ColorSet::from_sorted_unique(std::move(merged));
            }
            if (v + 1 < k) {
                std::vector<Color> merged;
                std::set_union(unavailable.begin(), unavailable.end(), c[v + 1].begin(),
                               c[v + 1].end(), std::back_inserter(merged));
                unavailable = ColorSet::from_sorted_unique(std::move(merged));
            }
            const ColorSet substitutes = original.lists[v].set_minus(unavailable);
            if (substitutes.empty()) return std::nullopt;

            std::vector<Color> updated;
            updated.reserve(c[v].size());
            for (Color x : c[v]) {
                if (x != conflict) updated.push_back(x);
            }
            updated.push_back(*substitutes.begin());
            std::sort(updated.begin(), updated.end());
            c[v] = ColorSet::from_sorted_unique(std::move(updated));
            if (repairs) ++*repairs;
        }
    }
    return Coloring{std::move(c)};
}

PathInstance::PathInstance(ListAssignment lists, std::int32_t b)
    : lists_(std::move(lists)), b_(b) {
    if (b_ < 1) throw std::invalid_argument("PathInstance: b must be positive");
    if (lists_.size() < 3) {
        throw std::invalid_argument("PathInstance: need at least one interior vertex");
    }
    const Vertex n = static_cast<Vertex>(lists_.size()) - 1;
    const std::size_t bs = static_cast<std::size_t>(b_);
    if (lists_.at(0).size() != bs || lists_.at(n).size() != bs) {
        throw std::invalid_argument("PathInstance: endpoint lists must have exactly b colors");
    }
    const std::size_t a = lists_.at(1).size();
    for (Vertex i = 1; i < n; ++i) {
        if (lists_.at(i).size() != a) {
            throw std::invalid_argument("PathInstance: interior lists must share one size");
        }
    }
    a_ = static_cast<std::int32_t>(a);
    if (a_ - 2 * b_ < 1) {
        throw std::invalid_argument("PathInstance: interior size must be at least 2b+1");
    }
}

SolveReport solve_path(const PathInstance& pi, std::uint64_t oracle_budget) {
    const Vertex n = pi.n();
    SolveReport report;
    report.threshold.rule = ThresholdVerdict::Rule::PathLength;
    report.threshold.required_length = even_ceil(Rational(2 * pi.b(), pi.e()));
    report.threshold.length = n;
    report.threshold.met = n >= report.threshold.required_length;
    report.total_colors = pi.lists().total_colors();

    const Instance plain{PathShape{n}, pi.lists(), pi.b(), std::nullopt};

    const WaterfallList wl = waterfallize(pi.lists());
    for (const auto& l : pi.lists().lists) report.steps += l.size();

    const GreedyResult greedy = greedy_forward(wl, pi.b(), true);
    report.steps += static_cast<std::uint64_t>(n) + 1;
    if (greedy.coloring) {
        auto repaired = dewaterfallize(*greedy.coloring, wl, pi.lists(), &report.repairs);
        report.steps += static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(report.repairs);
        if (repaired && validate_coloring(plain, *repaired).ok) {
            report.outcome = Outcome::Colored;
            report.coloring = std::move(*repaired);
            return report;
        }
    }

    // exact fallback
    report.fallback_used = true;
    try {
        const oracle::OracleResult exact = oracle::feasible(plain, oracle_budget);
        report.oracle_nodes = exact.nodes;
        if (exact.feasible) {
            report.outcome = Outcome::Colored;
            report.coloring = exact.witness;
        } else {
            report.outcome = Outcome::Infeasible;
            if (report.threshold.met) {
                report.note = "exact search found no coloring despite the length bound";
            }
        }
    } catch (const oracle::BudgetError& e) {
        report.oracle_nodes = e.nodes;
        report.outcome = Outcome::Unresolved;
        report.note = "exact fallback exceeded its node budget";
    }
    return report;
}

}  // namespace fch::pathcolor
