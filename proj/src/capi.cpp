#include "freechoose.h"

#include <cstring>
#include <map>
#include <string>

#include "core.hpp"
#include "cyclesolver.hpp"
#include "document.hpp"
#include "oracle.hpp"
#include "solver.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
fch_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const fch::doc::DocumentError& e) {
        set_error(e.what());
        return FCH_ERR_PARSE;
    } catch (const fch::oracle::BudgetError& e) {
        set_error(e.what());
        return FCH_ERR_BUDGET;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return FCH_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return FCH_ERR_INTERNAL;
    }
}

std::uint64_t effective_budget(uint64_t budget) {
    return budget == 0 ? fch::oracle::kDefaultBudget : budget;
}

}  // namespace

// Instances are assembled incrementally: lists arrive per vertex, the anchor
// is optional, and full validation happens when the handle is used.
struct fch_instance {
    fch::GraphShape shape;
    std::map<fch::Vertex, fch::ColorSet> lists;
    std::int32_t b = 1;
    std::optional<fch::Anchor> anchor;

    fch::Instance materialize() const {
        fch::Instance inst;
        inst.shape = shape;
        inst.b = b;
        inst.anchor = anchor;
        const fch::Vertex n = fch::shape_vertex_count(shape);
        inst.lists.lists.resize(static_cast<std::size_t>(n));
        for (fch::Vertex v = 0; v < n; ++v) {
            const auto it = lists.find(v);
            if (it == lists.end()) {
                throw std::invalid_argument("lists." + std::to_string(v) +
                                            ": missing list for vertex");
            }
            inst.lists.lists[static_cast<std::size_t>(v)] = it->second;
        }
        if (const std::string err = fch::instance_error(inst); !err.empty()) {
            throw std::invalid_argument(err);
        }
        return inst;
    }

    static fch_instance from(const fch::Instance& inst) {
        fch_instance out;
        out.shape = inst.shape;
        out.b = inst.b;
        out.anchor = inst.anchor;
        for (std::size_t v = 0; v < inst.lists.size(); ++v) {
            out.lists[static_cast<fch::Vertex>(v)] = inst.lists.lists[v];
        }
        return out;
    }
};

struct fch_report {
    enum class Kind { Solve, Oracle, FreeCheck, Verify } kind = Kind::Solve;
    fch::SolveReport solve;
    fch::oracle::OracleResult oracle;
    fch::oracle::FreeCheckResult free_check;
    fch::ValidationResult validation;

    fch_outcome outcome() const {
        switch (kind) {
            case Kind::Solve:
                switch (solve.outcome) {
                    case fch::Outcome::Colored: return FCH_COLORED;
                    case fch::Outcome::Infeasible: return FCH_INFEASIBLE;
                    case fch::Outcome::Unresolved: return FCH_UNRESOLVED;
                }
                return FCH_UNRESOLVED;
            case Kind::Oracle:
                return oracle.feasible ? FCH_COLORED : FCH_INFEASIBLE;
            case Kind::FreeCheck:
                return free_check.all_extendable ? FCH_COLORED : FCH_INFEASIBLE;
            case Kind::Verify:
                return validation.ok ? FCH_COLORED : FCH_INFEASIBLE;
        }
        return FCH_UNRESOLVED;
    }

    const fch::Coloring* coloring() const {
        if (kind == Kind::Solve && solve.coloring) return &*solve.coloring;
        if (kind == Kind::Oracle && oracle.witness) return &*oracle.witness;
        return nullptr;
    }

    std::string to_json() const {
        switch (kind) {
            case Kind::Solve: return fch::doc::emit_solve_report(solve);
            case Kind::Oracle: return fch::doc::emit_oracle_result(oracle);
            case Kind::FreeCheck: return fch::doc::emit_free_check(free_check);
            case Kind::Verify: return fch::doc::emit_validation(validation);
        }
        return "";
    }

    std::string to_text() const {
        switch (kind) {
            case Kind::Solve: return fch::doc::solve_report_text(solve);
            case Kind::Oracle: return fch::doc::oracle_result_text(oracle);
            case Kind::FreeCheck: return fch::doc::free_check_text(free_check);
            case Kind::Verify: return fch::doc::validation_text(validation);
        }
        return "";
    }
};

extern "C" {

const char* fch_version(void) { return "1.0.0"; }

const char* fch_last_error(void) { return g_last_error.c_str(); }

fch_status fch_instance_create_path(int32_t length, fch_instance** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out must not be null");
        if (length < 0) throw std::invalid_argument("path length must be non-negative");
        auto* inst = new fch_instance;
        inst->shape = fch::PathShape{length};
        *out = inst;
        return FCH_OK;
    });
}

fch_status fch_instance_create_cycle(int32_t length, fch_instance** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out must not be null");
        if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
        auto* inst = new fch_instance;
        inst->shape = fch::CycleShape{length};
        *out = inst;
        return FCH_OK;
    });
}

fch_status fch_instance_create_tree_of_cycles(int32_t vertex_count, const int32_t* edge_pairs,
                                              int32_t edge_count, fch_instance** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out must not be null");
        if (vertex_count < 1) throw std::invalid_argument("vertex count must be positive");
        if (edge_count < 0 || (edge_count > 0 && !edge_pairs)) {
            throw std::invalid_argument("edge_pairs must not be null when edge_count > 0");
        }
        fch::TreeOfCyclesShape shape;
        shape.vertex_count = vertex_count;
        for (int32_t i = 0; i < edge_count; ++i) {
            shape.edges.emplace_back(edge_pairs[2 * i], edge_pairs[2 * i + 1]);
        }
        auto* inst = new fch_instance;
        inst->shape = std::move(shape);
        *out = inst;
        return FCH_OK;
    });
}

fch_status fch_instance_set_b(fch_instance* inst, int32_t b) {
    return guarded([&] {
        if (!inst) throw std::invalid_argument("instance must not be null");
        if (b < 1) throw std::invalid_argument("b must be a positive integer");
        inst->b = b;
        return FCH_OK;
    });
}

fch_status fch_instance_set_list(fch_instance* inst, int32_t vertex, const int32_t* colors,
                                 int32_t count) {
    return guarded([&] {
        if (!inst) throw std::invalid_argument("instance must not be null");
        if (count < 0 || (count > 0 && !colors)) {
            throw std::invalid_argument("colors must not be null when count > 0");
        }
        const fch::Vertex n = fch::shape_vertex_count(inst->shape);
        if (vertex < 0 || vertex >= n) throw std::invalid_argument("vertex out of range");
        inst->lists[vertex] = fch::ColorSet(std::vector<fch::Color>(colors, colors + count));
        return FCH_OK;
    });
}

fch_status fch_instance_set_anchor(fch_instance* inst, int32_t vertex, const int32_t* colors,
                                   int32_t count) {
    return guarded([&] {
        if (!inst) throw std::invalid_argument("instance must not be null");
        if (count < 1 || !colors) throw std::invalid_argument("anchor needs at least one color");
        const fch::Vertex n = fch::shape_vertex_count(inst->shape);
        if (vertex < 0 || vertex >= n) throw std::invalid_argument("vertex out of range");
        inst->anchor =
            fch::Anchor{vertex, fch::ColorSet(std::vector<fch::Color>(colors, colors + count))};
        return FCH_OK;
    });
}

fch_status fch_instance_clear_anchor(fch_instance* inst) {
    return guarded([&] {
        if (!inst) throw std::invalid_argument("instance must not be null");
        inst->anchor.reset();
        return FCH_OK;
    });
}

int32_t fch_instance_vertex_count(const fch_instance* inst) {
    return inst ? fch::shape_vertex_count(inst->shape) : 0;
}

void fch_instance_free(fch_instance* inst) { delete inst; }

fch_status fch_instance_from_json(const char* text, fch_instance** out) {
    return guarded([&] {
        if (!text || !out) throw std::invalid_argument("text and out must not be null");
        const fch::Instance inst = fch::doc::parse_instance(text);
        *out = new fch_instance(fch_instance::from(inst));
        return FCH_OK;
    });
}

fch_status fch_instance_to_json(const fch_instance* inst, char** out) {
    return guarded([&] {
        if (!inst || !out) throw std::invalid_argument("instance and out must not be null");
        *out = copy_string(fch::doc::emit_instance(inst->materialize()));
        return FCH_OK;
    });
}

void fch_string_free(char* text) { delete[] text; }

fch_status fch_solve(const fch_instance* inst, uint64_t budget, fch_report** out) {
    return guarded([&] {
        if (!inst || !out) throw std::invalid_argument("instance and out must not be null");
        fch::SolveOptions opt;
        opt.oracle_budget = effective_budget(budget);
        auto* report = new fch_report;
        report->kind = fch_report::Kind::Solve;
        try {
            report->solve = fch::solve(inst->materialize(), opt);
        } catch (...) {
            delete report;
            throw;
        }
        *out = report;
        return FCH_OK;
    });
}

fch_status fch_oracle_feasible(const fch_instance* inst, uint64_t budget, fch_report** out) {
    return guarded([&] {
        if (!inst || !out) throw std::invalid_argument("instance and out must not be null");
        auto* report = new fch_report;
        report->kind = fch_report::Kind::Oracle;
        try {
            report->oracle = fch::oracle::feasible(inst->materialize(), effective_budget(budget));
        } catch (...) {
            delete report;
            throw;
        }
        *out = report;
        return FCH_OK;
    });
}

fch_status fch_oracle_free_check(const fch_instance* inst, int32_t vertex, uint64_t budget,
                                 fch_report** out) {
    return guarded([&] {
        if (!inst || !out) throw std::invalid_argument("instance and out must not be null");
        auto* report = new fch_report;
        report->kind = fch_report::Kind::FreeCheck;
        try {
            report->free_check = fch::oracle::free_check_list(inst->materialize(), vertex,
                                                              effective_budget(budget));
        } catch (...) {
            delete report;
            throw;
        }
        *out = report;
        return FCH_OK;
    });
}

fch_status fch_counterexample_even_cycle(int32_t p, int32_t a, int32_t b, fch_instance** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out must not be null");
        fch::ListAssignment lists = fch::cyclesolver::counterexample_list(p, a, b);
        fch::Instance inst;
        inst.shape = fch::CycleShape{2 * p};
        inst.lists = std::move(lists);
        inst.b = b;
        inst.anchor = fch::Anchor{0, inst.lists.at(0).first(static_cast<std::size_t>(b))};
        *out = new fch_instance(fch_instance::from(inst));
        return FCH_OK;
    });
}

fch_status fch_verify(const fch_instance* inst, const char* coloring_json, fch_report** out) {
    return guarded([&] {
        if (!inst || !coloring_json || !out) {
            throw std::invalid_argument("instance, coloring_json and out must not be null");
        }
        const fch::Instance instance = inst->materialize();
        const fch::Coloring coloring =
            fch::doc::parse_coloring(coloring_json, fch::shape_vertex_count(instance.shape));
        auto* report = new fch_report;
        report->kind = fch_report::Kind::Verify;
        report->validation = fch::validate_coloring(instance, coloring);
        *out = report;
        return FCH_OK;
    });
}

fch_status fch_fchr_cycle(int32_t n, int64_t* num, int64_t* den) {
    return guarded([&] {
        if (!num || !den) throw std::invalid_argument("num and den must not be null");
        const fch::Rational r = fch::fchr_cycle(n);
        *num = r.num();
        *den = r.den();
        return FCH_OK;
    });
}

fch_status fch_even_ceil(int64_t num, int64_t den, int64_t* out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out must not be null");
        *out = fch::even_ceil(fch::Rational(num, den));
        return FCH_OK;
    });
}

fch_status fch_cycle_guaranteed(int32_t n, int32_t a, int32_t b, int32_t* out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out must not be null");
        if (n < 3) throw std::invalid_argument("cycle length must be at least 3");
        if (a < 1 || b < 1) throw std::invalid_argument("a and b must be positive");
        *out = fch::is_guaranteed_cycle(n, a, b) ? 1 : 0;
        return FCH_OK;
    });
}

fch_outcome fch_report_outcome(const fch_report* report) {
    return report ? report->outcome() : FCH_UNRESOLVED;
}

int32_t fch_report_threshold_met(const fch_report* report) {
    return report && report->kind == fch_report::Kind::Solve && report->solve.threshold.met ? 1
                                                                                            : 0;
}

int32_t fch_report_fallback_used(const fch_report* report) {
    return report && report->kind == fch_report::Kind::Solve && report->solve.fallback_used ? 1
                                                                                            : 0;
}

uint64_t fch_report_steps(const fch_report* report) {
    return report && report->kind == fch_report::Kind::Solve ? report->solve.steps : 0;
}

uint64_t fch_report_nodes(const fch_report* report) {
    if (!report) return 0;
    switch (report->kind) {
        case fch_report::Kind::Solve: return report->solve.oracle_nodes;
        case fch_report::Kind::Oracle: return report->oracle.nodes;
        case fch_report::Kind::FreeCheck: return report->free_check.nodes;
        case fch_report::Kind::Verify: return 0;
    }
    return 0;
}

int64_t fch_report_repairs(const fch_report* report) {
    return report && report->kind == fch_report::Kind::Solve ? report->solve.repairs : 0;
}

int64_t fch_report_total_colors(const fch_report* report) {
    return report && report->kind == fch_report::Kind::Solve ? report->solve.total_colors : 0;
}

fch_status fch_report_vertex_colors(const fch_report* report, int32_t vertex,
                                    int32_t* colors_out, int32_t capacity, int32_t* count_out) {
    return guarded([&] {
        if (!report || !count_out) {
            throw std::invalid_argument("report and count_out must not be null");
        }
        const fch::Coloring* coloring = report->coloring();
        if (!coloring) throw std::invalid_argument("report carries no coloring");
        if (vertex < 0 || static_cast<std::size_t>(vertex) >= coloring->assignment.size()) {
            throw std::invalid_argument("vertex out of range");
        }
        const fch::ColorSet& set = coloring->at(vertex);
        *count_out = static_cast<int32_t>(set.size());
        if (colors_out) {
            const int32_t n = std::min<int32_t>(capacity, *count_out);
            for (int32_t i = 0; i < n; ++i) colors_out[i] = set.values()[static_cast<std::size_t>(i)];
        }
        return FCH_OK;
    });
}

fch_status fch_report_to_json(const fch_report* report, char** out) {
    return guarded([&] {
        if (!report || !out) throw std::invalid_argument("report and out must not be null");
        *out = copy_string(report->to_json());
        return FCH_OK;
    });
}

fch_status fch_report_to_text(const fch_report* report, char** out) {
    return guarded([&] {
        if (!report || !out) throw std::invalid_argument("report and out must not be null");
        *out = copy_string(report->to_text());
        return FCH_OK;
    });
}

void fch_report_free(fch_report* report) { delete report; }

}  // extern "C"
