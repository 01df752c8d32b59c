#include <doctest.h>

#include <random>

#include "dsr/engine.hpp"
#include "dsr/families.hpp"
#include "dsr/gadgets.hpp"
#include "dsr/io.hpp"
#include "helpers.hpp"

using namespace dsr;
using test::path_graph;

TEST_CASE("minimal instance file") {
    std::string text = "p dsr 2 1 1 0\ne 1 2\ns 1\nt 2\n";
    auto inst = parse_instance(text);
    CHECK(inst.variant == Variant::DTS);
    CHECK(inst.start == std::vector<int>{0});
    CHECK(inst.target == std::vector<int>{1});
    CHECK(write_instance(inst) == text);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_instance("p dsr 2 1 1 0\ne 1 2\ns 1 1\nt 1 2\n"),
                         doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_AS(parse_instance("p dsr 2 5 1 0\ne 1 2\ns 1\nt 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p dsr 2 1 0 0\ne 1 2\nr 1\ns 1\nt 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p dsr 2 1 0 1\ne 1 2\nr 1\ns 1\nt 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p dsr 2 1 0 0\ne 1 2\ns 1\nt 2\nq 3\n"), ParseError);
}

TEST_CASE("write-parse-write is byte stable") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph base = random_undirected_graph(n, rng);
        bool directed = rng() % 2 == 0;
        bool colored = rng() % 2 == 0;

        std::optional<std::vector<Color>> colors;
        if (colored) {
            colors.emplace();
            for (int v = 0; v < n; ++v)
                colors->push_back(rng() % 4 == 0 ? Color::Red : Color::Blue);
        }
        Graph g(n, base.edges(), directed, colors);
        std::vector<int> s, t;
        for (int v = 0; v < n; ++v) {
            if (colored && g.is_red(v)) continue;
            if (rng() % 2) s.push_back(v);
        }
        if (s.empty()) continue;
        t = s;
        ReconfigInstance inst{std::move(g), directed ? Variant::DTS : Variant::TS, s, t,
                              rng() % 3 == 0 ? std::optional<int>(1 + rng() % 3)
                                             : std::nullopt};
        std::string once = write_instance(inst);
        std::string twice = write_instance(parse_instance(once));
        CHECK(once == twice);
    }
}

TEST_CASE("comments and reordering canonicalize") {
    std::string messy =
        "c header comment\np dsr 3 2 0 1\nt 3 1\ns 1 3\ne 2 1\nc mid\ne 2 3\nr 2\n";
    auto inst = parse_instance(messy);
    std::string canon = write_instance(inst);
    CHECK(canon == "p dsr 3 2 0 1\ne 1 2\ne 2 3\nr 2\ns 1 3\nt 1 3\n");
    CHECK(write_instance(parse_instance(canon)) == canon);
}

TEST_CASE("pace dominating-set input") {
    Graph g = parse_pace_ds("c tiny\np ds 3 2\ne 1 2\ne 2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK_FALSE(g.directed());
    CHECK(write_pace_ds(g) == "p ds 3 2\ne 1 2\ne 2 3\n");
}

TEST_CASE("dot export shapes follow the roles") {
    auto r = build_ts_path(path_graph(3), 1);
    std::string dot = to_dot(r.instance, &r.anchors);
    CHECK(dot.find("graph dsr {") != std::string::npos);
    CHECK(dot.find("shape=box") != std::string::npos);
    CHECK(dot.find("shape=diamond") != std::string::npos);
    CHECK(dot.find("fillcolor=lightcoral") != std::string::npos);
    CHECK(dot.find("label=\"h_0\"") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));

    ReconfigInstance both{Graph(2, {{0, 1}}, true), Variant::DTS, {0}, {0}, std::nullopt};
    std::string dot2 = to_dot(both);
    CHECK(dot2.find("digraph") != std::string::npos);
    CHECK(dot2.find("Msquare") != std::string::npos);
    CHECK(dot2.find("->") != std::string::npos);
}

TEST_CASE("sequence and decomposition json round-trips") {
    LabeledSequence seq{{0, 2}, {{0, 0, 1}, {1, 2, 3}}};
    auto back = sequence_from_json(sequence_json(seq));
    CHECK(back.initial == seq.initial);
    CHECK(back.moves == seq.moves);

    auto r = build_ts_cycle(path_graph(3), 1);
    auto d = build_decomposition(r, DecompKind::Tree);
    auto d2 = decomposition_from_json(decomposition_json(d));
    CHECK(d2.kind == d.kind);
    CHECK(d2.bags == d.bags);
    CHECK(d2.parent == d.parent);
    CHECK(d2.property2_roots == d.property2_roots);
    CHECK(validate_decomposition(r.instance.graph, d2).ok);
}

TEST_CASE("sidecar json carries anchors claims and defects") {
    auto r = build_dag_depth3(path_graph(3), 1, false);
    json j = sidecar_json(r);
    CHECK(j["gadget"] == "dag-depth3");
    CHECK(j["claims"]["depth"] == 3);
    CHECK(j["defects"].size() == 1);
    CHECK(j["anchors"]["a_1"] == r.anchors.at("a_1") + 1);
}

TEST_CASE("solve records are schema stable") {
    auto inst = parse_instance("p dsr 2 1 1 0\ne 1 2\ns 1\nt 2\n");
    auto res = reachable(inst);
    json j = solve_record("solve", "x.dsr", inst, res);
    for (const char* key : {"command", "instance", "variant", "reachable", "outcome",
                            "stats", "defects", "sequence", "iteration"})
        CHECK(j.contains(key));
    CHECK(j["sequence"][0] == json::array({0, 1, 2}));
}
