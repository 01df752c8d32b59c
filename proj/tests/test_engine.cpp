#include <doctest.h>

#include <random>

#include "dsr/engine.hpp"
#include "dsr/families.hpp"
#include "helpers.hpp"

using namespace dsr;
using test::cycle_graph;
using test::path_graph;

namespace {

ReconfigInstance ts(Graph g, std::vector<int> s, std::vector<int> t) {
    return {std::move(g), Variant::TS, std::move(s), std::move(t), std::nullopt};
}

ReconfigInstance dts(Graph g, std::vector<int> s, std::vector<int> t) {
    return {std::move(g), Variant::DTS, std::move(s), std::move(t), std::nullopt};
}

// Spec of the negative depth-2 fixture: d2 has no in-arc from a leaving
// token, so the matching (and the search) must fail.
ReconfigInstance depth2_negative() {
    // 0=t, 1=s1, 2=s2, 3=d1, 4=d2; arcs t->d2, s1->d1, s2->d1
    Graph g(5, {{0, 4}, {1, 3}, {2, 3}}, true);
    return dts(std::move(g), {0, 1, 2}, {0, 3, 4});
}

// One-way corridor that must be vacated and re-entered: unreachable with
// iteration 1, reachable with iteration 2.
ReconfigInstance corridor() {
    // 0=x, 1=v1, 2=v2, 3=y, 4=h, 5=w
    Graph g(6, {{0, 1}, {1, 3}, {1, 2}, {2, 1}, {4, 3}, {4, 0}, {4, 5}}, true);
    return dts(std::move(g), {0, 1, 4}, {1, 3, 4});
}

} // namespace

TEST_CASE("legal moves on a 4-cycle") {
    auto inst = ts(cycle_graph(4), {0, 2}, {1, 3});
    auto moves = legal_moves(inst, std::vector<int>{0, 2});
    CHECK(moves == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {2, 1}, {2, 3}});
}

TEST_CASE("legal moves on a two-vertex chain") {
    auto inst = dts(Graph(2, {{0, 1}}, true), {0}, {1});
    CHECK(legal_moves(inst, std::vector<int>{0}) ==
          std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("legal moves keep pendant red vertices guarded") {
    Graph g(3, {{0, 1}, {1, 2}}, false,
            std::vector<Color>{Color::Blue, Color::Blue, Color::Red});
    auto inst = ts(std::move(g), {1}, {1});
    CHECK(legal_moves(inst, std::vector<int>{1}).empty());
}

TEST_CASE("legal moves check arity") {
    auto inst = ts(cycle_graph(4), {0, 2}, {1, 3});
    CHECK_THROWS_AS(legal_moves(inst, std::vector<int>{0}), std::invalid_argument);
}

TEST_CASE("bfs reachability on the 4-cycle") {
    auto res = reachable(ts(cycle_graph(4), {0, 1}, {2, 3}));
    REQUIRE(res.reachable());
    CHECK(res.sequence->moves.size() == 2);
    CHECK(validate_sequence(ts(cycle_graph(4), {0, 1}, {2, 3}), *res.sequence).ok);
}

TEST_CASE("start equals target") {
    auto res = reachable(ts(path_graph(3), {1}, {1}));
    REQUIRE(res.reachable());
    CHECK(res.sequence->moves.empty());
    CHECK(reachable_bounded_iteration(ts(path_graph(3), {1}, {1}), 1).reachable());
}

TEST_CASE("negative depth-2 fixture is unreachable") {
    auto res = reachable(depth2_negative());
    CHECK_FALSE(res.reachable());
    auto d2 = solve_depth2(depth2_negative());
    CHECK_FALSE(d2.reachable());
}

TEST_CASE("invalid instances are rejected with the failed check") {
    auto inst = ts(path_graph(3), {0}, {2}); // {0} does not dominate P3
    CHECK_THROWS_AS(reachable(inst), PreconditionError);
}

TEST_CASE("budget exceeded is a distinct outcome") {
    auto res = reachable(ts(cycle_graph(6), {0, 2, 4}, {1, 3, 5}), EngineOptions{1});
    CHECK(res.outcome == Outcome::BudgetExceeded);
}

TEST_CASE("sequence validation flags the first violation") {
    auto inst = ts(cycle_graph(4), {0, 1}, {2, 3});

    LabeledSequence good{{0, 1}, {{0, 0, 3}, {1, 1, 2}}};
    CHECK(validate_sequence(inst, good).ok);

    LabeledSequence non_edge{{0, 1}, {{0, 0, 2}}};
    auto check = validate_sequence(inst, non_edge);
    CHECK_FALSE(check.ok);
    CHECK(check.rule == "slide");
    CHECK(check.index == 0);

    // P6 with tokens on {1,4}: moving 1 -> 0 leaves vertex 2 uncovered.
    auto p6 = ts(path_graph(6), {1, 4}, {1, 4});
    LabeledSequence undominated{{1, 4}, {{0, 1, 0}}};
    auto dom = validate_sequence(p6, undominated);
    CHECK_FALSE(dom.ok);
    CHECK(dom.rule == "domination");

    LabeledSequence wrong_final{{0, 1}, {{0, 0, 3}}};
    auto fin = validate_sequence(inst, wrong_final);
    CHECK_FALSE(fin.ok);
    CHECK(fin.rule == "final-configuration");

    LabeledSequence bad_token{{0, 1}, {{5, 0, 3}}};
    CHECK(validate_sequence(inst, bad_token).rule == "arity");
}

TEST_CASE("iteration counting") {
    LabeledSequence straight{{0}, {{0, 0, 1}, {0, 1, 2}}};
    CHECK(iteration(straight) == 1);

    LabeledSequence back_and_forth{{0}, {{0, 0, 1}, {0, 1, 0}}};
    CHECK(iteration(back_and_forth) == 2);

    LabeledSequence idle{{3, 7}, {}};
    CHECK(iteration(idle) == 1);
}

TEST_CASE("bounded iteration rejects iota zero") {
    CHECK_THROWS_AS(reachable_bounded_iteration(ts(path_graph(3), {1}, {1}), 0),
                    std::invalid_argument);
}

TEST_CASE("corridor fixture needs a second visit") {
    auto inst = corridor();
    auto unbounded = reachable(inst);
    REQUIRE(unbounded.reachable());
    CHECK(iteration(*unbounded.sequence) == 2);

    CHECK_FALSE(reachable_bounded_iteration(inst, 1).reachable());
    auto two = reachable_bounded_iteration(inst, 2);
    REQUIRE(two.reachable());
    CHECK(iteration(*two.sequence) <= 2);
    CHECK(validate_sequence(inst, *two.sequence).ok);
}

TEST_CASE("bounded search success implies unbounded success") {
    std::mt19937 rng(19);
    int checked = 0;
    while (checked < 25) {
        Graph g = random_undirected_graph(5, rng);
        std::vector<int> s, d;
        for (int v = 0; v < 5; ++v) {
            if (rng() % 2) s.push_back(v);
            if (rng() % 2) d.push_back(v);
        }
        if (s.size() != d.size() || s.empty()) continue;
        auto inst = ts(g, s, d);
        if (!check_instance(inst).empty()) continue;
        ++checked;
        auto full = reachable(inst);
        auto bounded = reachable_bounded_iteration(inst, 2);
        if (bounded.reachable()) CHECK(full.reachable());
        if (full.reachable()) {
            // Some finite bound suffices: the witness length is one.
            int cap = static_cast<int>(full.sequence->moves.size()) + 1;
            CHECK(reachable_bounded_iteration(inst, cap).reachable());
        }
    }
}

TEST_CASE("TS reachability is symmetric in start and target") {
    std::mt19937 rng(23);
    int checked = 0;
    while (checked < 30) {
        Graph g = random_undirected_graph(5, rng);
        std::vector<int> s, d;
        for (int v = 0; v < 5; ++v) {
            if (rng() % 2) s.push_back(v);
            if (rng() % 2) d.push_back(v);
        }
        if (s.size() != d.size() || s.empty()) continue;
        auto fwd = ts(g, s, d);
        if (!check_instance(fwd).empty()) continue;
        ++checked;
        auto bwd = ts(g, d, s);
        CHECK(reachable(fwd).reachable() == reachable(bwd).reachable());
    }
}

TEST_CASE("maximum bipartite matching") {
    std::vector<std::pair<int, int>> complete{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(max_bipartite_matching(2, 2, complete).size == 2);

    std::vector<std::pair<int, int>> shared{{0, 0}, {1, 0}};
    CHECK(max_bipartite_matching(2, 2, shared).size == 1);

    CHECK(max_bipartite_matching(3, 3, {}).size == 0);
}

TEST_CASE("depth-2 solver basics") {
    auto single = dts(Graph(2, {{0, 1}}, true), {0}, {1});
    auto res = solve_depth2(single);
    REQUIRE(res.reachable());
    CHECK(validate_sequence(single, *res.sequence).ok);

    auto same = dts(Graph(2, {{0, 1}}, true), {0}, {0});
    CHECK(solve_depth2(same).reachable());

    auto deep = dts(Graph(3, {{0, 1}, {1, 2}}, true), {0, 1}, {1, 2});
    CHECK_THROWS_AS(solve_depth2(deep), PreconditionError);
    CHECK_THROWS_AS(solve_depth2(ts(path_graph(3), {1}, {1})), VariantError);
}

TEST_CASE("depth-2 solver agrees with search on small instances") {
    std::mt19937 rng(31);
    int checked = 0;
    while (checked < 200) {
        Graph g = random_depth2_dag(6, rng);
        std::vector<int> s, d;
        for (int v = 0; v < 6; ++v) {
            if (rng() % 2) s.push_back(v);
            if (rng() % 2) d.push_back(v);
        }
        if (s.size() != d.size() || s.empty()) continue;
        auto inst = dts(g, s, d);
        if (!check_instance(inst).empty()) continue;
        ++checked;
        auto fast = solve_depth2(inst);
        auto slow = reachable(inst);
        CHECK(fast.reachable() == slow.reachable());
        if (fast.reachable()) CHECK(validate_sequence(inst, *fast.sequence).ok);
    }
}

TEST_CASE("DTS witnesses on DAGs never revisit a vertex") {
    std::mt19937 rng(37);
    int checked = 0;
    while (checked < 60) {
        Graph g = random_depth2_dag(6, rng);
        std::vector<int> s, d;
        for (int v = 0; v < 6; ++v) {
            if (rng() % 2) s.push_back(v);
            if (rng() % 2) d.push_back(v);
        }
        if (s.size() != d.size() || s.empty()) continue;
        auto inst = dts(g, s, d);
        if (!check_instance(inst).empty()) continue;
        ++checked;
        auto res = reachable(inst);
        if (res.reachable()) CHECK(iteration(*res.sequence) == 1);
    }
}
