#ifndef DSR_GRAPH_HPP
#define DSR_GRAPH_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dsr/bitset.hpp"
#include "dsr/errors.hpp"

namespace dsr {

enum class Color : uint8_t { Blue = 0, Red = 1 };

struct Layering {
    std::vector<int> layer; // 1-based layer per vertex
    int depth = 0;
};

// Loop-free graph over dense vertex indices 0..n-1. Orientation is a
// graph-level flag; colors are optional. Immutable after construction,
// so instances can be shared freely across workers.
class Graph {
public:
    Graph() : Graph(0, {}, false) {}
    Graph(int n, std::vector<std::pair<int, int>> edges, bool directed,
          std::optional<std::vector<Color>> colors = std::nullopt);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool directed() const { return directed_; }
    bool colored() const { return colors_.has_value(); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    Color color(int v) const;
    bool is_blue(int v) const { return !colored() || color(v) == Color::Blue; }
    bool is_red(int v) const { return colored() && color(v) == Color::Red; }
    std::vector<int> blue_vertices() const;
    std::vector<int> red_vertices() const;

    // Underlying undirected adjacency (orientation ignored), sorted.
    const std::vector<int>& neighbors(int v) const;
    // Directed adjacency; VariantError on undirected graphs.
    const std::vector<int>& out_neighbors(int v) const;
    const std::vector<int>& in_neighbors(int v) const;

    bool has_undirected_edge(int u, int v) const;
    bool has_arc(int u, int v) const; // directed graphs only

    // Closed neighborhood N[v] in the underlying undirected graph.
    std::vector<int> closed_neighborhood(int v) const;
    const Bitset& closed_mask(int v) const { check_vertex(v); return closed_masks_[v]; }

    void check_vertex(int v) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    bool directed_;
    std::optional<std::vector<Color>> colors_;
    std::vector<std::vector<int>> und_adj_, out_adj_, in_adj_;
    std::vector<Bitset> closed_masks_;
};

// Unique DAG layering: layer 1 holds the vertices without incoming arcs,
// depth is the number of vertices on the longest directed path.
Layering compute_layers(const Graph& g);

// N[s] covers V(g), on the underlying undirected graph.
bool is_dominating(const Graph& g, std::span<const int> s);

// s is all-blue and every red vertex lies in N[s].
bool is_redblue_dominating(const Graph& g, std::span<const int> s);

// Connected components of the subgraph induced on blue vertices, each
// sorted, ordered by smallest member.
std::vector<std::vector<int>> blue_components(const Graph& g);

// True iff removing fvs leaves the directed graph acyclic.
bool verify_dfvs(const Graph& g, std::span<const int> fvs);

} // namespace dsr

#endif
