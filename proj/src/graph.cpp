#include "dsr/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dsr {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, bool directed,
             std::optional<std::vector<Color>> colors)
    : n_(n), edges_(std::move(edges)), directed_(directed), colors_(std::move(colors)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    if (colors_ && static_cast<int>(colors_->size()) != n_)
        throw std::invalid_argument("color vector size does not match vertex count");

    und_adj_.assign(n_, {});
    if (directed_) {
        out_adj_.assign(n_, {});
        in_adj_.assign(n_, {});
    }

    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::out_of_range("edge endpoint out of range: (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        std::pair<int, int> key = directed_ ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        und_adj_[u].push_back(v);
        und_adj_[v].push_back(u);
        if (directed_) {
            out_adj_[u].push_back(v);
            in_adj_[v].push_back(u);
        }
    }
    for (auto& a : und_adj_) std::sort(a.begin(), a.end());
    for (auto& a : out_adj_) std::sort(a.begin(), a.end());
    for (auto& a : in_adj_) std::sort(a.begin(), a.end());

    closed_masks_.assign(n_, Bitset(n_));
    for (int v = 0; v < n_; ++v) {
        closed_masks_[v].set(v);
        for (int u : und_adj_[v]) closed_masks_[v].set(u);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

Color Graph::color(int v) const {
    check_vertex(v);
    if (!colors_) throw VariantError("graph is not colored");
    return (*colors_)[v];
}

std::vector<int> Graph::blue_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (is_blue(v)) out.push_back(v);
    return out;
}

std::vector<int> Graph::red_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (is_red(v)) out.push_back(v);
    return out;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return und_adj_[v];
}

const std::vector<int>& Graph::out_neighbors(int v) const {
    check_vertex(v);
    if (!directed_) throw VariantError("out_neighbors requires a directed graph");
    return out_adj_[v];
}

const std::vector<int>& Graph::in_neighbors(int v) const {
    check_vertex(v);
    if (!directed_) throw VariantError("in_neighbors requires a directed graph");
    return in_adj_[v];
}

bool Graph::has_undirected_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(und_adj_[u].begin(), und_adj_[u].end(), v);
}

bool Graph::has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (!directed_) throw VariantError("has_arc requires a directed graph");
    return std::binary_search(out_adj_[u].begin(), out_adj_[u].end(), v);
}

std::vector<int> Graph::closed_neighborhood(int v) const {
    check_vertex(v);
    std::vector<int> out = und_adj_[v];
    out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

Layering compute_layers(const Graph& g) {
    if (!g.directed()) throw VariantError("compute_layers requires a directed graph");
    int n = g.vertex_count();
    std::vector<int> indeg(n, 0), layer(n, 0);
    for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(g.in_neighbors(v).size());

    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) {
            layer[v] = 1;
            queue.push_back(v);
        }
    int processed = 0, depth = n > 0 ? 1 : 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        ++processed;
        for (int v : g.out_neighbors(u)) {
            layer[v] = std::max(layer[v], layer[u] + 1);
            if (--indeg[v] == 0) {
                depth = std::max(depth, layer[v]);
                queue.push_back(v);
            }
        }
    }
    if (processed != n) throw NotADagError("directed cycle present");
    return {std::move(layer), depth};
}

bool is_dominating(const Graph& g, std::span<const int> s) {
    Bitset cover(g.vertex_count());
    for (int v : s) cover |= g.closed_mask(v);
    return cover.count() == g.vertex_count();
}

bool is_redblue_dominating(const Graph& g, std::span<const int> s) {
    if (!g.colored()) throw VariantError("is_redblue_dominating requires a colored graph");
    Bitset cover(g.vertex_count());
    for (int v : s) {
        if (g.is_red(v)) return false;
        cover |= g.closed_mask(v);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_red(v) && !cover.test(v)) return false;
    return true;
}

std::vector<std::vector<int>> blue_components(const Graph& g) {
    if (!g.colored()) throw VariantError("blue_components requires a colored graph");
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) {
        if (!g.is_blue(v) || comp[v] != -1) continue;
        std::vector<int> stack{v}, members;
        comp[v] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int w : g.neighbors(u))
                if (g.is_blue(w) && comp[w] == -1) {
                    comp[w] = comp[v];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool verify_dfvs(const Graph& g, std::span<const int> fvs) {
    if (!g.directed()) throw VariantError("verify_dfvs requires a directed graph");
    int n = g.vertex_count();
    std::vector<char> removed(n, 0);
    for (int v : fvs) {
        g.check_vertex(v);
        removed[v] = 1;
    }
    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v) {
        if (removed[v]) continue;
        for (int u : g.in_neighbors(v))
            if (!removed[u]) ++indeg[v];
    }
    std::vector<int> queue;
    int remaining = 0;
    for (int v = 0; v < n; ++v) {
        if (removed[v]) continue;
        ++remaining;
        if (indeg[v] == 0) queue.push_back(v);
    }
    int processed = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        ++processed;
        for (int v : g.out_neighbors(u))
            if (!removed[v] && --indeg[v] == 0) queue.push_back(v);
    }
    return processed == remaining;
}

} // namespace dsr
