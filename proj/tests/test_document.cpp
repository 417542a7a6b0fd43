#include "doctest.h"

#include "document.hpp"
#include "solver.hpp"
#include "testutil.hpp"

using namespace fch;

TEST_CASE("instances of every shape round-trip through the document format") {
    auto rng = testutil::rng_for(113);
    for (int trial = 0; trial < 60; ++trial) {
        Instance inst;
        switch (trial % 3) {
            case 0:
                inst = testutil::random_cycle_instance(rng, 3 + static_cast<int>(rng() % 6), 5,
                                                       2, 15, trial % 2 == 0);
                break;
            case 1: {
                const int n = 2 + static_cast<int>(rng() % 6);
                inst.shape = PathShape{n};
                inst.lists = testutil::random_path_profile_lists(rng, n, 5, 2, 15);
                inst.b = 2;
                break;
            }
            default: {
                const auto cactus = testutil::random_cactus(rng, 3, 14, 1);
                inst = testutil::random_cactus_instance(rng, cactus, 5, 2, 15);
                break;
            }
        }
        const std::string text = doc::emit_instance(inst);
        const Instance back = doc::parse_instance(text);
        CHECK(back == inst);
        CHECK(doc::emit_instance(back) == text);  // canonical bytes
    }
}

TEST_CASE("parse errors carry the offending field") {
    const auto error_path = [](const std::string& text) {
        try {
            doc::parse_instance(text);
            return std::string("(parsed)");
        } catch (const doc::DocumentError& e) {
            return std::string(e.what());
        }
    };

    CHECK(error_path("{") .find("invalid JSON") != std::string::npos);
    CHECK(error_path("[]").find("expected a JSON object") != std::string::npos);
    CHECK(error_path(R"({"graph":{"kind":"cycle","n":3},"b":1,"lists":{}})") ==
          "format: missing");
    CHECK(error_path(R"({"format":2,"graph":{"kind":"cycle","n":3},"b":1,"lists":{}})")
              .find("unsupported version") != std::string::npos);

    // a 4-cycle document with the list for vertex 3 missing
    const std::string missing = R"({
      "format": 1,
      "graph": {"kind": "cycle", "n": 4},
      "b": 1,
      "lists": {"0": [1,2], "1": [1,2], "2": [1,2]}
    })";
    CHECK(error_path(missing) == "lists.3: missing list for vertex 3");

    const std::string stray = R"({
      "format": 1,
      "graph": {"kind": "cycle", "n": 3},
      "b": 1,
      "lists": {"0": [1], "1": [1], "2": [1], "7": [1]}
    })";
    CHECK(error_path(stray).find("lists.7") != std::string::npos);

    const std::string typo = R"({
      "format": 1,
      "graph": {"kind": "cycle", "n": 3},
      "b": 1,
      "lists": {"0": [1], "1": [1], "2": [1]},
      "anchorr": {}
    })";
    CHECK(error_path(typo).find("anchorr: unknown key") != std::string::npos);

    const std::string bad_anchor = R"({
      "format": 1,
      "graph": {"kind": "cycle", "n": 3},
      "b": 2,
      "lists": {"0": [1,2,3], "1": [1,2,3], "2": [1,2,3]},
      "anchor": {"vertex": 0, "colors": [1]}
    })";
    CHECK(error_path(bad_anchor).find("anchor.colors") != std::string::npos);

    const std::string dup_colors = R"({
      "format": 1,
      "graph": {"kind": "cycle", "n": 3},
      "b": 1,
      "lists": {"0": [1,1], "1": [1], "2": [1]}
    })";
    CHECK(error_path(dup_colors).find("lists.0") != std::string::npos);

    const std::string shared_cycles = R"({
      "format": 1,
      "graph": {"kind": "tree_of_cycles", "vertices": 5,
                "edges": [[0,1],[1,2],[2,0],[0,3],[3,4],[4,0]]},
      "b": 1,
      "lists": {"0": [1], "1": [1], "2": [1], "3": [1], "4": [1]}
    })";
    CHECK(error_path(shared_cycles).find("not disjoint") != std::string::npos);
}

TEST_CASE("solve reports serialize both ways") {
    auto rng = testutil::rng_for(127);
    const Instance inst = testutil::random_cycle_instance(rng, 6, 7, 3, 21, true);
    const SolveReport report = solve(inst);
    REQUIRE(report.outcome == Outcome::Colored);

    const std::string json = doc::emit_solve_report(report);
    CHECK(json.find("\"outcome\": \"colored\"") != std::string::npos);
    CHECK(json.find("\"required\": \"7/3\"") != std::string::npos);
    CHECK(json.find("\"coloring\"") != std::string::npos);

    const std::string text = doc::solve_report_text(report);
    CHECK(text.find("outcome: colored") != std::string::npos);
    CHECK(text.find("threshold: met") != std::string::npos);

    // a report doubles as a coloring document
    const Coloring parsed = doc::parse_coloring(json, 6);
    CHECK(parsed == *report.coloring);
}

TEST_CASE("coloring documents reject missing vertices") {
    CHECK_THROWS_AS(doc::parse_coloring(R"({"coloring": {"0": [1]}})", 2), doc::DocumentError);
    CHECK_THROWS_AS(doc::parse_coloring(R"({"nope": 1})", 1), doc::DocumentError);
}

TEST_CASE("emitted documents are deterministic") {
    auto rng1 = testutil::rng_for(131);
    auto rng2 = testutil::rng_for(131);
    const Instance a = testutil::random_cycle_instance(rng1, 5, 5, 2, 15, true);
    const Instance b = testutil::random_cycle_instance(rng2, 5, 5, 2, 15, true);
    CHECK(doc::emit_instance(a) == doc::emit_instance(b));
    CHECK(doc::emit_solve_report(solve(a)) == doc::emit_solve_report(solve(b)));
}
