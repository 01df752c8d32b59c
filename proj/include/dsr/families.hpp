#ifndef DSR_FAMILIES_HPP
#define DSR_FAMILIES_HPP

#include <random>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

// Every labeled undirected graph on n vertices. Intended for n <= 5.
std::vector<Graph> all_undirected_graphs(int n);

// The connected ones, in the same enumeration order.
std::vector<Graph> connected_undirected_graphs(int n);

bool is_connected(const Graph& g);

// G(n, p) sample; deterministic for a fixed generator state.
Graph random_undirected_graph(int n, std::mt19937& rng, double p = 0.5);

// Random DAG with arcs from layer 1 into layer 2 only.
Graph random_depth2_dag(int n, std::mt19937& rng);

} // namespace dsr

#endif
