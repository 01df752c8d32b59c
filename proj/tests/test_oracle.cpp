#include <doctest.h>

#include <random>

#include "dsr/families.hpp"
#include "dsr/oracle.hpp"
#include "helpers.hpp"

using namespace dsr;
using test::cycle_graph;
using test::path_graph;
using test::two_disjoint_edges;

TEST_CASE("dominating set decision") {
    CHECK(has_dominating_set(path_graph(3), 1));
    CHECK_FALSE(has_dominating_set(cycle_graph(4), 1));
    CHECK(has_dominating_set(cycle_graph(4), 2));
}

TEST_CASE("minimum dominating set") {
    auto single = min_dominating_set(Graph(1, {}, false));
    CHECK(single.size == 1);
    CHECK(single.witness == std::vector<int>{0});

    Graph star(4, {{0, 1}, {0, 2}, {0, 3}}, false);
    auto s = min_dominating_set(star);
    CHECK(s.size == 1);
    CHECK(s.witness == std::vector<int>{0});

    CHECK(min_dominating_set(two_disjoint_edges()).size == 2);
}

TEST_CASE("decision is monotone and consistent with the minimum") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_undirected_graph(6, rng);
        auto m = min_dominating_set(g);
        CHECK(has_dominating_set(g, m.size));
        if (m.size >= 1) CHECK_FALSE(has_dominating_set(g, m.size - 1));
        for (int k = m.size; k <= 6; ++k) CHECK(has_dominating_set(g, k));
        CHECK(is_dominating(g, m.witness));
    }
}

TEST_CASE("equivalence report on a tiny positive case") {
    auto rep = equivalence_report("ts-path", path_graph(3), 1);
    CHECK(rep.ds_answer);
    CHECK(rep.reconfig_answer);
    CHECK(rep.agree);
    CHECK(rep.instance_vertices == 20);
    CHECK(rep.validity.empty());
}

TEST_CASE("equivalence report on a tiny negative case") {
    auto rep = equivalence_report("ts-path", two_disjoint_edges(), 1);
    CHECK_FALSE(rep.ds_answer);
    CHECK_FALSE(rep.reconfig_answer);
    CHECK(rep.agree);
}

TEST_CASE("text-exact depth-3 reduction surfaces its defect") {
    EquivOptions opts;
    opts.repair = false;
    auto rep = equivalence_report("dag-depth3", path_graph(3), 1, opts);
    REQUIRE(!rep.defects.empty());
    CHECK(rep.defects.front().find("S-not-dominating") != std::string::npos);
    REQUIRE(!rep.validity.empty());
    bool found = false;
    for (const auto& v : rep.validity)
        if (v.find("start set is not dominating") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("np-fixed-tw equivalence holds in both directions") {
    EquivOptions wide;
    wide.budget.max_blue = 128;
    wide.budget.max_configurations = 3e8; // a-priori bound; the search stays tiny

    Graph p4 = path_graph(4);
    auto neg = equivalence_report("np-fixed-tw", two_disjoint_edges(), 1, wide);
    CHECK_FALSE(neg.ds_answer);
    CHECK(neg.agree);

    auto neg2 = equivalence_report("np-fixed-tw", p4, 1, wide);
    CHECK_FALSE(neg2.ds_answer);
    CHECK(neg2.agree);

    auto pos = equivalence_report("np-fixed-tw", p4, 2, wide);
    CHECK(pos.ds_answer);
    CHECK(pos.agree);
}

TEST_CASE("budget violations are loud") {
    EquivOptions opts;
    opts.budget.max_blue = 4;
    CHECK_THROWS_AS(equivalence_report("ts-path", path_graph(3), 1, opts), BudgetError);
}
