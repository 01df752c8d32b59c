#ifndef DSR_TEST_HELPERS_HPP
#define DSR_TEST_HELPERS_HPP

#include <vector>

#include "dsr/graph.hpp"

namespace dsr::test {

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e), false);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e), false);
}

inline Graph two_disjoint_edges() {
    return Graph(4, {{0, 1}, {2, 3}}, false);
}

} // namespace dsr::test

#endif
