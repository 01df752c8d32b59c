#include <doctest.h>

#include <set>

#include "dsr/decomp.hpp"
#include "dsr/engine.hpp"
#include "dsr/families.hpp"
#include "dsr/gadgets.hpp"
#include "dsr/oracle.hpp"
#include "helpers.hpp"

using namespace dsr;
using test::cycle_graph;
using test::path_graph;

namespace {

void check_anchor_cover(const ReductionOutput& r) {
    CHECK(static_cast<int>(r.anchors.size()) == r.instance.graph.vertex_count());
    std::set<int> values;
    for (const auto& [name, v] : r.anchors) values.insert(v);
    CHECK(static_cast<int>(values.size()) == r.instance.graph.vertex_count());
}

} // namespace

TEST_CASE("validator gadget layout and adjacency") {
    Graph p3 = path_graph(3);
    auto r = build_validator(p3, 1);
    CHECK(r.instance.graph.vertex_count() == 15);
    check_anchor_cover(r);

    int s = r.anchors.at("s");
    CHECK(r.instance.graph.has_undirected_edge(r.anchors.at("u^1_{2,1}"), s));
    CHECK_FALSE(r.instance.graph.has_undirected_edge(r.anchors.at("u^1_{1,3}"), s));

    auto r2 = build_validator(Graph(1, {}, false), 2);
    CHECK(r2.instance.graph.vertex_count() == 13);

    CHECK_THROWS_AS(build_validator(p3, 0), std::invalid_argument);
}

TEST_CASE("row selections dominate the global vertex per the selection lemma") {
    Graph p3 = path_graph(3);
    for (int j = 0; j < 3; ++j)
        CHECK(validator_selection_dominates(p3, 1, std::vector<int>{1}, j));
    CHECK_FALSE(validator_selection_dominates(p3, 1, std::vector<int>{0}, 2));
}

TEST_CASE("selection lemma biconditional on small graphs") {
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& g : all_undirected_graphs(n)) {
            for (int k = 1; k <= 2; ++k) {
                auto validator = build_validator(g, k);
                std::vector<int> rows(k, 0);
                while (true) {
                    bool all_columns = true;
                    for (int j = 0; j < n && all_columns; ++j)
                        all_columns = validator_selection_dominates(validator, rows, j);
                    std::set<int> chosen(rows.begin(), rows.end());
                    std::vector<int> set_vec(chosen.begin(), chosen.end());
                    CHECK(all_columns == is_dominating(g, set_vec));

                    int pos = k - 1;
                    while (pos >= 0 && rows[pos] == n - 1) rows[pos--] = 0;
                    if (pos < 0) break;
                    ++rows[pos];
                }
            }
        }
    }
}

TEST_CASE("ts-path reduction shape") {
    auto r = build_ts_path(path_graph(3), 1);
    CHECK(r.instance.graph.vertex_count() == 20);
    CHECK(r.instance.start.size() == 2);
    CHECK(r.instance.variant == Variant::TS);
    CHECK(r.instance.iteration_bound == 1);
    CHECK(check_instance(r.instance).empty());
    CHECK(check_property1(r.instance));
    check_anchor_cover(r);
    CHECK(r.claims.pathwidth == 7); // 3k+4 with k=1
}

TEST_CASE("ts-cycle reduction shape") {
    auto r = build_ts_cycle(path_graph(3), 1);
    CHECK(r.instance.graph.vertex_count() == 18);
    // n=3: the target clock vertex is h_{(n+1) mod 3} = h_1.
    CHECK(r.instance.target.back() == r.anchors.at("h_1"));
    CHECK(check_instance(r.instance).empty());
    CHECK(check_property1(r.instance));
    check_anchor_cover(r);
}

TEST_CASE("directed variants are structurally sound") {
    auto rp = build_dts_path(path_graph(3), 2);
    CHECK(check_instance(rp.instance).empty());
    CHECK(compute_layers(rp.instance.graph).depth > 0); // a DAG
    CHECK(check_property1(rp.instance));

    auto rc = build_dts_cycle(path_graph(3), 2);
    CHECK(check_instance(rc.instance).empty());
    CHECK_THROWS_AS(compute_layers(rc.instance.graph), NotADagError);
    CHECK(verify_dfvs(rc.instance.graph, std::vector<int>{rc.anchors.at("h_0")}));

    // Arcs between color classes always leave the blue side.
    for (auto [u, v] : rc.instance.graph.edges())
        CHECK_FALSE(rc.instance.graph.is_red(u));
}

TEST_CASE("depth-3 reduction counts and defect flags") {
    Graph g = cycle_graph(4);
    auto repaired = build_dag_depth3(g, 2, true);
    CHECK(repaired.instance.graph.vertex_count() == 25); // 3k + n(k+1) + 7
    CHECK(repaired.instance.start.size() == 6);          // k + 4
    CHECK(repaired.defect_flags.empty());
    CHECK(check_instance(repaired.instance).empty());
    CHECK(compute_layers(repaired.instance.graph).depth == 3);
    check_anchor_cover(repaired);

    auto text_exact = build_dag_depth3(g, 2, false);
    CHECK(text_exact.defect_flags.size() == 1);
    CHECK(compute_layers(text_exact.instance.graph).depth == 3);
    auto errs = check_instance(text_exact.instance);
    bool found = false;
    for (const auto& e : errs)
        if (e.find("start set is not dominating") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("ts-path witness follows the column sweep") {
    Graph p3 = path_graph(3);
    auto r = build_ts_path(p3, 1);
    auto seq = build_witness_ts_path(p3, 1, std::vector<int>{1});
    CHECK(seq.moves.size() == 8); // (n+1) token moves + (n+1) clock moves
    auto check = validate_sequence(r.instance, seq);
    INFO(check.rule, " ", check.detail, " at ", check.index);
    CHECK(check.ok);
    CHECK(iteration(seq) == 1);

    CHECK_THROWS_AS(build_witness_ts_path(p3, 1, std::vector<int>{0}), PreconditionError);
}

TEST_CASE("witnesses validate for every dominating selection") {
    for (const Graph& g : connected_undirected_graphs(3)) {
        for (int k = 1; k <= 2; ++k) {
            std::vector<int> choice(k, 0);
            while (true) {
                if (is_dominating(g, choice)) {
                    for (const char* id : {"ts-path", "ts-cycle", "dts-path", "dts-cycle",
                                           "dag-depth3"}) {
                        auto r = build_by_id(id, g, k, true);
                        auto seq = build_witness_by_id(id, g, k, choice);
                        REQUIRE(seq.has_value());
                        auto check = validate_sequence(r.instance, *seq);
                        INFO(id, ": ", check.rule, " ", check.detail, " at ", check.index);
                        CHECK(check.ok);
                    }
                }
                int pos = k - 1;
                while (pos >= 0 && choice[pos] == g.vertex_count() - 1) choice[pos--] = 0;
                if (pos < 0) break;
                ++choice[pos];
            }
        }
    }
}

TEST_CASE("subdivided checking gadget") {
    Graph p3 = path_graph(3);
    auto r = build_variation_checking(p3, 1);
    check_anchor_cover(r);
    CHECK(compute_layers(r.instance.graph).depth > 0); // a DAG

    const Graph& h = r.instance.graph;
    int p1 = r.anchors.at("p^1_1"), p2 = r.anchors.at("p^1_2");
    CHECK(h.has_arc(r.anchors.at("u^1_{1,1}"), p1));
    CHECK_FALSE(h.has_arc(r.anchors.at("u^1_{1,2}"), p1));
    CHECK(h.has_arc(r.anchors.at("u^1_{1,2}"), p2));
    CHECK(h.has_arc(r.anchors.at("u'^1_{1,2}"), p1));
    CHECK(h.has_arc(r.anchors.at("u'^1_{1,2}"), p2));

    // Row path from s^1 to d^1 has 2n internal vertices.
    int row_len = 0;
    for (const auto& [name, v] : r.anchors)
        if (name.rfind("u", 0) == 0 && name.find("_{1,") != std::string::npos) ++row_len;
    CHECK(row_len == 6);

    // Subdivision vertices mirror the domination contacts of their sources.
    int s = r.anchors.at("s");
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            std::string u = "u^1_{" + std::to_string(i) + "," + std::to_string(j) + "}";
            std::string up = "u'^1_{" + std::to_string(i) + "," + std::to_string(j) + "}";
            CHECK(h.has_arc(r.anchors.at(u), s) == h.has_arc(r.anchors.at(up), s));
        }
}

TEST_CASE("clock with battery") {
    auto r = build_clock_battery(3);
    CHECK(r.instance.graph.vertex_count() == 8);
    CHECK(r.instance.graph.red_vertices().size() == 2);
    CHECK(r.instance.target.front() == r.anchors.at("h_2")); // n odd
    CHECK(build_clock_battery(4).instance.target.front() == 0); // h_1 when n even
    CHECK(is_redblue_dominating(r.instance.graph, r.instance.start));
    CHECK(is_redblue_dominating(r.instance.graph, r.instance.target));
    CHECK_THROWS_AS(build_clock_battery(1), std::invalid_argument);
}

TEST_CASE("np-fixed-tw composition") {
    auto r = build_np_fixed_tw(path_graph(3), 1);
    CHECK(static_cast<int>(r.instance.graph.blue_vertices().size()) == 26);
    CHECK(r.instance.start.size() == 4); // k + n
    CHECK(check_instance(r.instance).empty());
    CHECK(compute_layers(r.instance.graph).depth > 0); // a DAG
    check_anchor_cover(r);
    // The clock component holds several start tokens, so the one-token-per-
    // component property intentionally fails here.
    CHECK_FALSE(check_property1(r.instance));
}

TEST_CASE("undirected lift unconditionally guards blue components") {
    auto r = build_ts_path(path_graph(3), 1);
    auto lifted = lift_redblue_undirected(r);
    CHECK(lifted.instance.start.size() == r.instance.start.size() + 1);
    CHECK_FALSE(lifted.instance.graph.colored());
    CHECK(check_instance(lifted.instance).empty());
    check_anchor_cover(lifted);
    CHECK(reachable(lifted.instance).reachable() == reachable(r.instance).reachable());

    CHECK_THROWS_AS(lift_redblue_undirected(build_dts_path(path_graph(3), 1)),
                    PreconditionError);
}

TEST_CASE("directed lift adds one guarded source") {
    auto r = build_dts_cycle(path_graph(2), 1);
    auto lifted = lift_redblue_directed(r);
    CHECK(lifted.instance.start.size() == r.instance.start.size() + 1);
    CHECK(check_instance(lifted.instance).empty());
    CHECK(verify_dfvs(lifted.instance.graph, std::vector<int>{lifted.anchors.at("h_0")}));
    CHECK(reachable(lifted.instance).reachable() == reachable(r.instance).reachable());
}

TEST_CASE("tw-preserving lift freezes one token per blue vertex") {
    auto r = build_dts_path(Graph(1, {}, false), 1);
    int blue = static_cast<int>(r.instance.graph.blue_vertices().size());
    auto lifted = lift_redblue_directed_tw_preserving(r);
    CHECK(static_cast<int>(lifted.instance.start.size()) ==
          static_cast<int>(r.instance.start.size()) + blue);
    CHECK(check_instance(lifted.instance).empty());
    CHECK(compute_layers(lifted.instance.graph).depth > 0); // still a DAG
    CHECK(reachable(lifted.instance).reachable() == reachable(r.instance).reachable());
}

TEST_CASE("builder dispatch") {
    CHECK_THROWS_AS(build_by_id("nonsense", path_graph(2), 1), std::invalid_argument);
    CHECK_FALSE(build_witness_by_id("np-fixed-tw", path_graph(3), 1, std::vector<int>{1})
                    .has_value());
}
