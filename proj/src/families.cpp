#include "dsr/families.hpp"

namespace dsr {

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

std::vector<Graph> all_undirected_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (uint32_t mask = 0; mask < (uint32_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t b = 0; b < slots.size(); ++b)
            if ((mask >> b) & 1) edges.push_back(slots[b]);
        out.emplace_back(n, std::move(edges), false);
    }
    return out;
}

std::vector<Graph> connected_undirected_graphs(int n) {
    std::vector<Graph> out;
    for (auto& g : all_undirected_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

Graph random_undirected_graph(int n, std::mt19937& rng, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges), false);
}

Graph random_depth2_dag(int n, std::mt19937& rng) {
    std::bernoulli_distribution layer_coin(0.5), arc_coin(0.5);
    std::vector<int> layer1, layer2;
    for (int v = 0; v < n; ++v) (layer_coin(rng) ? layer1 : layer2).push_back(v);
    if (layer1.empty() && !layer2.empty()) {
        layer1.push_back(layer2.back());
        layer2.pop_back();
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : layer2) {
        bool has_in = false;
        for (int u : layer1)
            if (arc_coin(rng)) {
                edges.emplace_back(u, v);
                has_in = true;
            }
        if (!has_in && !layer1.empty()) edges.emplace_back(layer1[0], v);
    }
    return Graph(n, std::move(edges), true);
}

} // namespace dsr
