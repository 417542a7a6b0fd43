#include "document.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "blocktree.hpp"

namespace fch::doc {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw DocumentError(path, message);
}

const json& require(const json& obj, const std::string& key, const std::string& parent) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(parent.empty() ? key : parent + "." + key, "missing");
    return *it;
}

std::int64_t require_int(const json& obj, const std::string& key, const std::string& parent) {
    const json& v = require(obj, key, parent);
    if (!v.is_number_integer()) {
        fail(parent.empty() ? key : parent + "." + key, "expected an integer");
    }
    return v.get<std::int64_t>();
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& parent) {
    for (const auto& [key, _] : obj.items()) {
        if (std::find_if(known.begin(), known.end(),
                         [&](const char* k) { return key == k; }) == known.end()) {
            fail(parent.empty() ? key : parent + "." + key, "unknown key");
        }
    }
}

ColorSet parse_color_array(const json& arr, const std::string& path) {
    if (!arr.is_array()) fail(path, "expected an array of colors");
    std::vector<Color> colors;
    colors.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number_integer()) {
            fail(path + "[" + std::to_string(i) + "]", "expected an integer color");
        }
        const std::int64_t c = arr[i].get<std::int64_t>();
        if (c < 0) fail(path + "[" + std::to_string(i) + "]", "colors must be non-negative");
        if (c > INT32_MAX) fail(path + "[" + std::to_string(i) + "]", "color too large");
        colors.push_back(static_cast<Color>(c));
    }
    try {
        return ColorSet(std::move(colors));
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

ojson color_array(const ColorSet& set) {
    ojson arr = ojson::array();
    for (Color c : set) arr.push_back(c);
    return arr;
}

ojson coloring_object(const Coloring& coloring) {
    ojson obj = ojson::object();
    for (std::size_t v = 0; v < coloring.assignment.size(); ++v) {
        obj[std::to_string(v)] = color_array(coloring.assignment[v]);
    }
    return obj;
}

std::string rule_name(ThresholdVerdict::Rule rule) {
    switch (rule) {
        case ThresholdVerdict::Rule::CycleRatio: return "cycle_ratio";
        case ThresholdVerdict::Rule::TreeRatio: return "tree_ratio";
        case ThresholdVerdict::Rule::PathLength: return "path_length";
    }
    return "?";
}

std::string outcome_name(Outcome outcome) {
    switch (outcome) {
        case Outcome::Colored: return "colored";
        case Outcome::Infeasible: return "infeasible";
        case Outcome::Unresolved: return "unresolved";
    }
    return "?";
}

void write_coloring_text(std::ostream& out, const Coloring& coloring) {
    for (std::size_t v = 0; v < coloring.assignment.size(); ++v) {
        out << "  " << v << ":";
        for (Color c : coloring.assignment[v]) out << ' ' << c;
        out << '\n';
    }
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("", "expected a JSON object");
    reject_unknown_keys(j, {"format", "graph", "b", "lists", "anchor"}, "");

    if (require_int(j, "format", "") != kFormatVersion) {
        fail("format", "unsupported version (expected 1)");
    }

    const json& graph = require(j, "graph", "");
    if (!graph.is_object()) fail("graph", "expected an object");
    const json& kind_field = require(graph, "kind", "graph");
    if (!kind_field.is_string()) fail("graph.kind", "expected a string");
    const std::string kind = kind_field.get<std::string>();

    Instance inst;
    if (kind == "path") {
        reject_unknown_keys(graph, {"kind", "n"}, "graph");
        const std::int64_t n = require_int(graph, "n", "graph");
        if (n < 0 || n > 10'000'000) fail("graph.n", "path length out of range");
        inst.shape = PathShape{static_cast<Vertex>(n)};
    } else if (kind == "cycle") {
        reject_unknown_keys(graph, {"kind", "n"}, "graph");
        const std::int64_t n = require_int(graph, "n", "graph");
        if (n < 3 || n > 10'000'000) fail("graph.n", "cycle length out of range (minimum 3)");
        inst.shape = CycleShape{static_cast<Vertex>(n)};
    } else if (kind == "tree_of_cycles") {
        reject_unknown_keys(graph, {"kind", "vertices", "edges"}, "graph");
        const std::int64_t count = require_int(graph, "vertices", "graph");
        if (count < 1 || count > 10'000'000) fail("graph.vertices", "vertex count out of range");
        const json& edges = require(graph, "edges", "graph");
        if (!edges.is_array()) fail("graph.edges", "expected an array of [u,v] pairs");
        TreeOfCyclesShape shape;
        shape.vertex_count = static_cast<Vertex>(count);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::string path = "graph.edges[" + std::to_string(i) + "]";
            const json& e = edges[i];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer()) {
                fail(path, "expected a [u,v] pair of integers");
            }
            const std::int64_t u = e[0].get<std::int64_t>();
            const std::int64_t v = e[1].get<std::int64_t>();
            if (u < 0 || u >= count || v < 0 || v >= count) fail(path, "vertex out of range");
            shape.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        inst.shape = std::move(shape);
    } else {
        fail("graph.kind", "expected \"path\", \"cycle\" or \"tree_of_cycles\"");
    }

    const std::int64_t b = require_int(j, "b", "");
    if (b < 1 || b > 1'000'000) fail("b", "must be a positive integer");
    inst.b = static_cast<std::int32_t>(b);

    const Vertex n_vertices = shape_vertex_count(inst.shape);
    const json& lists = require(j, "lists", "");
    if (!lists.is_object()) fail("lists", "expected an object keyed by vertex index");
    for (const auto& [key, _] : lists.items()) {
        const bool numeric = !key.empty() && key.size() <= 9 &&
                             key.find_first_not_of("0123456789") == std::string::npos;
        if (!numeric || std::stoll(key) >= n_vertices) {
            fail("lists." + key, "not a vertex of the graph");
        }
    }
    inst.lists.lists.resize(static_cast<std::size_t>(n_vertices));
    for (Vertex v = 0; v < n_vertices; ++v) {
        const std::string key = std::to_string(v);
        const auto it = lists.find(key);
        if (it == lists.end()) fail("lists." + key, "missing list for vertex " + key);
        inst.lists.lists[static_cast<std::size_t>(v)] = parse_color_array(*it, "lists." + key);
    }

    if (const auto it = j.find("anchor"); it != j.end()) {
        const json& anchor = *it;
        if (!anchor.is_object()) fail("anchor", "expected an object");
        reject_unknown_keys(anchor, {"vertex", "colors"}, "anchor");
        const std::int64_t v = require_int(anchor, "vertex", "anchor");
        if (v < 0 || v >= n_vertices) fail("anchor.vertex", "out of range");
        const ColorSet colors =
            parse_color_array(require(anchor, "colors", "anchor"), "anchor.colors");
        inst.anchor = Anchor{static_cast<Vertex>(v), colors};
    }

    if (const std::string err = instance_error(inst); !err.empty()) {
        fail("", err);  // already field-prefixed
    }
    if (std::holds_alternative<TreeOfCyclesShape>(inst.shape)) {
        // structural validity is part of instance validity
        const auto check = validate_tree_of_cycles(inst.shape);
        if (!check.tree) fail("", check.error);
    }
    return inst;
}

std::string emit_instance(const Instance& inst) {
    ojson j;
    j["format"] = kFormatVersion;
    ojson graph;
    if (const auto* path = std::get_if<PathShape>(&inst.shape)) {
        graph["kind"] = "path";
        graph["n"] = path->length;
    } else if (const auto* cycle = std::get_if<CycleShape>(&inst.shape)) {
        graph["kind"] = "cycle";
        graph["n"] = cycle->length;
    } else {
        const auto& t = std::get<TreeOfCyclesShape>(inst.shape);
        graph["kind"] = "tree_of_cycles";
        graph["vertices"] = t.vertex_count;
        ojson edges = ojson::array();
        for (const auto& [u, v] : t.edges) edges.push_back(ojson::array({u, v}));
        graph["edges"] = std::move(edges);
    }
    j["graph"] = std::move(graph);
    j["b"] = inst.b;
    ojson lists = ojson::object();
    for (std::size_t v = 0; v < inst.lists.size(); ++v) {
        lists[std::to_string(v)] = color_array(inst.lists.lists[v]);
    }
    j["lists"] = std::move(lists);
    if (inst.anchor) {
        ojson anchor;
        anchor["vertex"] = inst.anchor->vertex;
        anchor["colors"] = color_array(inst.anchor->colors);
        j["anchor"] = std::move(anchor);
    }
    return j.dump(2) + "\n";
}

Coloring parse_coloring(const std::string& text, Vertex vertex_count) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("", "expected a JSON object");
    const json& coloring = require(j, "coloring", "");
    if (!coloring.is_object()) fail("coloring", "expected an object keyed by vertex index");
    Coloring out;
    out.assignment.resize(static_cast<std::size_t>(vertex_count));
    for (Vertex v = 0; v < vertex_count; ++v) {
        const std::string key = std::to_string(v);
        const auto it = coloring.find(key);
        if (it == coloring.end()) fail("coloring." + key, "missing colors for vertex " + key);
        out.assignment[static_cast<std::size_t>(v)] = parse_color_array(*it, "coloring." + key);
    }
    return out;
}

namespace {

ojson threshold_object(const ThresholdVerdict& t) {
    ojson obj;
    obj["rule"] = rule_name(t.rule);
    obj["met"] = t.met;
    if (t.rule == ThresholdVerdict::Rule::PathLength) {
        obj["required"] = t.required_length;
        obj["actual"] = t.length;
    } else {
        obj["required"] = t.required_ratio.str();
        obj["actual"] = t.ratio.str();
    }
    return obj;
}

std::string threshold_text(const ThresholdVerdict& t) {
    std::ostringstream out;
    out << (t.met ? "met" : "not met") << " (";
    if (t.rule == ThresholdVerdict::Rule::PathLength) {
        out << "length " << t.length << (t.met ? " >= " : " < ") << t.required_length;
    } else {
        out << (t.rule == ThresholdVerdict::Rule::CycleRatio ? "cycle ratio " : "tree ratio ")
            << t.ratio.str() << (t.met ? " >= " : " < ") << t.required_ratio.str();
    }
    out << ")";
    return out.str();
}

}  // namespace

std::string emit_solve_report(const SolveReport& report) {
    ojson j;
    j["format"] = kFormatVersion;
    j["kind"] = "solve";
    j["outcome"] = outcome_name(report.outcome);
    j["threshold"] = threshold_object(report.threshold);
    j["fallback_used"] = report.fallback_used;
    ojson counters;
    counters["repairs"] = report.repairs;
    counters["total_colors"] = report.total_colors;
    counters["steps"] = report.steps;
    counters["oracle_nodes"] = report.oracle_nodes;
    j["counters"] = std::move(counters);
    if (report.coloring) j["coloring"] = coloring_object(*report.coloring);
    if (!report.note.empty()) j["note"] = report.note;
    return j.dump(2) + "\n";
}

std::string solve_report_text(const SolveReport& report) {
    std::ostringstream out;
    out << "outcome: " << outcome_name(report.outcome) << '\n';
    out << "threshold: " << threshold_text(report.threshold) << '\n';
    out << "fallback: " << (report.fallback_used ? "used" : "not used") << '\n';
    out << "repairs: " << report.repairs << '\n';
    out << "total_colors: " << report.total_colors << '\n';
    out << "steps: " << report.steps << '\n';
    out << "oracle_nodes: " << report.oracle_nodes << '\n';
    if (!report.note.empty()) out << "note: " << report.note << '\n';
    if (report.coloring) {
        out << "coloring:\n";
        write_coloring_text(out, *report.coloring);
    }
    return out.str();
}

std::string emit_oracle_result(const oracle::OracleResult& result) {
    ojson j;
    j["format"] = kFormatVersion;
    j["kind"] = "oracle";
    j["feasible"] = result.feasible;
    j["nodes"] = result.nodes;
    if (result.witness) j["coloring"] = coloring_object(*result.witness);
    return j.dump(2) + "\n";
}

std::string oracle_result_text(const oracle::OracleResult& result) {
    std::ostringstream out;
    out << "feasible: " << (result.feasible ? "yes" : "no") << '\n';
    out << "nodes: " << result.nodes << '\n';
    if (result.witness) {
        out << "coloring:\n";
        write_coloring_text(out, *result.witness);
    }
    return out.str();
}

std::string emit_free_check(const oracle::FreeCheckResult& result) {
    ojson j;
    j["format"] = kFormatVersion;
    j["kind"] = "free_check";
    j["all_extendable"] = result.all_extendable;
    if (result.failing_anchor) j["failing_anchor"] = color_array(*result.failing_anchor);
    j["anchors_checked"] = result.anchors_checked;
    j["nodes"] = result.nodes;
    return j.dump(2) + "\n";
}

std::string free_check_text(const oracle::FreeCheckResult& result) {
    std::ostringstream out;
    out << "all_extendable: " << (result.all_extendable ? "yes" : "no") << '\n';
    if (result.failing_anchor) {
        out << "failing_anchor:";
        for (Color c : *result.failing_anchor) out << ' ' << c;
        out << '\n';
    }
    out << "anchors_checked: " << result.anchors_checked << '\n';
    out << "nodes: " << result.nodes << '\n';
    return out.str();
}

std::string emit_validation(const ValidationResult& result) {
    ojson j;
    j["format"] = kFormatVersion;
    j["kind"] = "verify";
    j["valid"] = result.ok;
    ojson violations = ojson::array();
    for (const Violation& v : result.violations) {
        ojson item;
        item["rule"] = v.rule;
        item["vertex"] = v.vertex;
        if (v.other >= 0) item["other"] = v.other;
        item["detail"] = v.detail;
        violations.push_back(std::move(item));
    }
    j["violations"] = std::move(violations);
    return j.dump(2) + "\n";
}

std::string validation_text(const ValidationResult& result) {
    std::ostringstream out;
    out << "valid: " << (result.ok ? "yes" : "no") << '\n';
    for (const Violation& v : result.violations) {
        out << "  " << v.rule << ": " << v.detail << '\n';
    }
    return out.str();
}

}  // namespace fch::doc
