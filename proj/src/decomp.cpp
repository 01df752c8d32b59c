#include "dsr/decomp.hpp"

#include <algorithm>
#include <set>

namespace dsr {

namespace {

std::string comp_id(int c) { return "C" + std::to_string(c + 1); }

void check_tree_structure(const Decomposition& d) {
    if (d.kind != DecompKind::Tree) return;
    size_t m = d.bags.size();
    if (d.parent.size() != m) throw std::invalid_argument("tree parent list size mismatch");
    int roots = 0;
    for (size_t x = 0; x < m; ++x) {
        int p = d.parent[x];
        if (p == -1) {
            ++roots;
            continue;
        }
        if (p < 0 || p >= static_cast<int>(m))
            throw std::invalid_argument("tree parent index out of range");
    }
    if (roots != 1) throw std::invalid_argument("tree decomposition needs exactly one root");
    // Walking parents must terminate at the root for every node.
    for (size_t x = 0; x < m; ++x) {
        size_t steps = 0;
        for (int cur = static_cast<int>(x); cur != -1; cur = d.parent[cur])
            if (++steps > m) throw std::invalid_argument("cycle in tree parent links");
    }
}

std::vector<std::vector<int>> children_of(const Decomposition& d) {
    std::vector<std::vector<int>> ch(d.bags.size());
    for (size_t x = 0; x < d.bags.size(); ++x)
        if (d.parent[x] != -1) ch[d.parent[x]].push_back(static_cast<int>(x));
    return ch;
}

std::vector<int> subtree_nodes(int root,
                               const std::vector<std::vector<int>>& ch) {
    std::vector<int> out, stack{root};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (int c : ch[x]) stack.push_back(c);
    }
    return out;
}

} // namespace

int Decomposition::width() const {
    size_t best = 0;
    for (const auto& b : bags) best = std::max(best, b.size());
    return static_cast<int>(best) - 1;
}

DecompCheck validate_decomposition(const Graph& g, const Decomposition& d) {
    check_tree_structure(d);
    DecompCheck res;
    int n = g.vertex_count();
    size_t m = d.bags.size();

    std::vector<std::vector<int>> holding(n);
    for (size_t x = 0; x < m; ++x)
        for (int v : d.bags[x]) {
            if (v < 0 || v >= n) {
                res.violations.push_back("vertex-range: bag " + std::to_string(x) +
                                         " holds vertex " + std::to_string(v));
                continue;
            }
            holding[v].push_back(static_cast<int>(x));
        }

    for (int v = 0; v < n; ++v)
        if (holding[v].empty())
            res.violations.push_back("vertex-coverage: vertex " + std::to_string(v));

    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (size_t x = 0; x < m && !covered; ++x) {
            bool has_u = std::find(d.bags[x].begin(), d.bags[x].end(), u) != d.bags[x].end();
            bool has_v = std::find(d.bags[x].begin(), d.bags[x].end(), v) != d.bags[x].end();
            covered = has_u && has_v;
        }
        if (!covered)
            res.violations.push_back("edge-coverage: edge (" + std::to_string(u) + "," +
                                     std::to_string(v) + ")");
    }

    if (d.kind == DecompKind::Path) {
        for (int v = 0; v < n; ++v) {
            if (holding[v].empty()) continue;
            auto [lo, hi] = std::minmax_element(holding[v].begin(), holding[v].end());
            if (*hi - *lo + 1 != static_cast<int>(holding[v].size()))
                res.violations.push_back("connectivity: vertex " + std::to_string(v));
        }
    } else {
        auto ch = children_of(d);
        for (int v = 0; v < n; ++v) {
            if (holding[v].empty()) continue;
            std::set<int> members(holding[v].begin(), holding[v].end());
            // BFS within the member-induced subtree from one member.
            std::set<int> seen{holding[v][0]};
            std::vector<int> stack{holding[v][0]};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                std::vector<int> adj = ch[x];
                if (d.parent[x] != -1) adj.push_back(d.parent[x]);
                for (int y : adj)
                    if (members.count(y) && !seen.count(y)) {
                        seen.insert(y);
                        stack.push_back(y);
                    }
            }
            if (seen.size() != members.size())
                res.violations.push_back("connectivity: vertex " + std::to_string(v));
        }
    }

    res.ok = res.violations.empty();
    if (res.ok) res.width = d.width();
    return res;
}

bool check_property1(const ReconfigInstance& inst) {
    if (!inst.graph.colored()) throw VariantError("property 1 needs a colored instance");
    std::set<int> start(inst.start.begin(), inst.start.end());
    std::set<int> target(inst.target.begin(), inst.target.end());
    for (const auto& comp : blue_components(inst.graph)) {
        int s_count = 0, t_count = 0;
        for (int v : comp) {
            s_count += start.count(v);
            t_count += target.count(v);
        }
        if (s_count != 1 || t_count != 1) return false;
    }
    return true;
}

bool check_property2(const ReconfigInstance& inst, const Decomposition& d) {
    if (!inst.graph.colored()) throw VariantError("property 2 needs a colored instance");
    if (!d.has_property2_annotation())
        throw PreconditionError("property-2 annotation required; the checker does not search");
    check_tree_structure(d);

    auto comps = blue_components(inst.graph);
    size_t m = d.bags.size();

    auto covers = [&](const std::vector<int>& comp, const std::vector<char>& in_region) {
        for (int v : comp) {
            bool found = false;
            for (size_t x = 0; x < m && !found; ++x)
                if (in_region[x] &&
                    std::find(d.bags[x].begin(), d.bags[x].end(), v) != d.bags[x].end())
                    found = true;
            if (!found) return false;
        }
        return true;
    };

    std::vector<char> claimed(m, 0);
    if (d.kind == DecompKind::Path) {
        if (d.property2_ranges.size() != comps.size()) return false;
        for (size_t c = 0; c < comps.size(); ++c) {
            auto it = d.property2_ranges.find(comp_id(static_cast<int>(c)));
            if (it == d.property2_ranges.end()) return false;
            auto [lo, hi] = it->second;
            if (lo < 0 || hi >= static_cast<int>(m) || lo > hi) return false;
            std::vector<char> region(m, 0);
            for (int x = lo; x <= hi; ++x) {
                if (claimed[x]) return false;
                claimed[x] = region[x] = 1;
            }
            if (!covers(comps[c], region)) return false;
        }
    } else {
        if (d.property2_roots.size() != comps.size()) return false;
        auto ch = children_of(d);
        for (size_t c = 0; c < comps.size(); ++c) {
            auto it = d.property2_roots.find(comp_id(static_cast<int>(c)));
            if (it == d.property2_roots.end()) return false;
            if (it->second < 0 || it->second >= static_cast<int>(m)) return false;
            std::vector<char> region(m, 0);
            for (int x : subtree_nodes(it->second, ch)) {
                if (claimed[x]) return false;
                claimed[x] = region[x] = 1;
            }
            if (!covers(comps[c], region)) return false;
        }
    }
    return true;
}

namespace {

std::vector<int> bag_of(std::set<int> s) { return {s.begin(), s.end()}; }

// Width 3k+4: every red vertex rides in every bag, per-level windows slide
// over the rows, and the h path gets its own window range.
Decomposition path_decomp_validator_path(const ReductionOutput& r) {
    ValidatorLayout lay{r.source_n, r.source_k};
    int n = lay.n, k = lay.k;
    std::set<int> reds{lay.s_global()};
    for (int l = 1; l <= k; ++l)
        for (int b = 0; b < 3; ++b) reds.insert(lay.p(l, b));

    Decomposition d;
    d.kind = DecompKind::Path;
    for (int l = 1; l <= k; ++l) {
        int lo = static_cast<int>(d.bags.size());
        for (int i = 1; i <= n; ++i) {
            int last_j = std::max(1, n - 1);
            for (int j = 1; j <= last_j; ++j) {
                std::set<int> bag = reds;
                bag.insert(lay.s_top(l));
                bag.insert(lay.d_top(l));
                bag.insert(lay.u(l, i, j));
                bag.insert(lay.u(l, i, std::min(j + 1, n)));
                d.bags.push_back(bag_of(bag));
            }
        }
        d.property2_ranges[comp_id(l - 1)] = {lo, static_cast<int>(d.bags.size()) - 1};
    }
    int hbase = lay.total();
    int lo = static_cast<int>(d.bags.size());
    for (int j = 0; j <= n; ++j) {
        std::set<int> bag = reds;
        bag.insert(hbase + j);
        bag.insert(hbase + j + 1);
        d.bags.push_back(bag_of(bag));
    }
    d.property2_ranges[comp_id(k)] = {lo, static_cast<int>(d.bags.size()) - 1};
    return d;
}

// Width 10: the three cycle vertices and s ride in every bag; a leading
// bag hosts the cycle component for the range matching.
Decomposition path_decomp_cycle_global(const ReductionOutput& r) {
    ValidatorLayout lay{r.source_n, r.source_k};
    int n = lay.n, k = lay.k;
    int hbase = lay.total();
    std::set<int> glob{hbase, hbase + 1, hbase + 2, lay.s_global()};

    Decomposition d;
    d.kind = DecompKind::Path;
    d.bags.push_back({hbase, hbase + 1, hbase + 2});
    d.property2_ranges[comp_id(k)] = {0, 0};
    for (int l = 1; l <= k; ++l) {
        int lo = static_cast<int>(d.bags.size());
        for (int i = 1; i <= n; ++i) {
            int last_j = std::max(1, n - 1);
            for (int j = 1; j <= last_j; ++j) {
                std::set<int> bag = glob;
                for (int b = 0; b < 3; ++b) bag.insert(lay.p(l, b));
                bag.insert(lay.s_top(l));
                bag.insert(lay.d_top(l));
                bag.insert(lay.u(l, i, j));
                bag.insert(lay.u(l, i, std::min(j + 1, n)));
                d.bags.push_back(bag_of(bag));
            }
        }
        d.property2_ranges[comp_id(l - 1)] = {lo, static_cast<int>(d.bags.size()) - 1};
    }
    return d;
}

// Junction ordering for k <= 2: level interiors never see the cycle
// vertices, which visit only a middle junction region, one bag per level.
Decomposition path_decomp_cycle_junction(const ReductionOutput& r) {
    ValidatorLayout lay{r.source_n, r.source_k};
    int n = lay.n, k = lay.k;
    int hbase = lay.total();
    int s = lay.s_global();

    Decomposition d;
    d.kind = DecompKind::Path;
    auto emit_block = [&](int l) {
        int lo = static_cast<int>(d.bags.size());
        for (int i = 1; i <= n; ++i) {
            int last_j = std::max(1, n - 1);
            for (int j = 1; j <= last_j; ++j) {
                std::set<int> bag{s, lay.s_top(l), lay.d_top(l)};
                for (int b = 0; b < 3; ++b) bag.insert(lay.p(l, b));
                bag.insert(lay.u(l, i, j));
                bag.insert(lay.u(l, i, std::min(j + 1, n)));
                d.bags.push_back(bag_of(bag));
            }
        }
        d.property2_ranges[comp_id(l - 1)] = {lo, static_cast<int>(d.bags.size()) - 1};
    };
    auto emit_junction = [&](int l) {
        std::set<int> bag{s, hbase, hbase + 1, hbase + 2};
        for (int b = 0; b < 3; ++b) bag.insert(lay.p(l, b));
        d.bags.push_back(bag_of(bag));
    };

    emit_block(1);
    int jlo = static_cast<int>(d.bags.size());
    emit_junction(1);
    if (k == 2) emit_junction(2);
    d.property2_ranges[comp_id(k)] = {jlo, static_cast<int>(d.bags.size()) - 1};
    if (k == 2) emit_block(2);
    return d;
}

// Width 6 tree: root holds the cycle and s, one branch per level, one chain
// per row. A dedicated leaf bag hosts the cycle component for the subtree
// matching.
Decomposition tree_decomp_cycle(const ReductionOutput& r) {
    ValidatorLayout lay{r.source_n, r.source_k};
    int n = lay.n, k = lay.k;
    int hbase = lay.total();
    int s = lay.s_global();

    Decomposition d;
    d.kind = DecompKind::Tree;
    auto add = [&](std::set<int> bag, int parent) {
        d.bags.push_back(bag_of(std::move(bag)));
        d.parent.push_back(parent);
        return static_cast<int>(d.bags.size()) - 1;
    };

    int root = add({hbase, hbase + 1, hbase + 2, s}, -1);
    int cycle_leaf = add({hbase, hbase + 1, hbase + 2}, root);
    d.property2_roots[comp_id(k)] = cycle_leaf;
    for (int l = 1; l <= k; ++l) {
        std::set<int> ps;
        for (int b = 0; b < 3; ++b) ps.insert(lay.p(l, b));
        std::set<int> a = ps;
        a.insert({hbase, hbase + 1, hbase + 2, s});
        int node_a = add(a, root);
        std::set<int> b = ps;
        b.insert({s, lay.s_top(l), lay.d_top(l)});
        int node_b = add(b, node_a);
        d.property2_roots[comp_id(l - 1)] = node_b;
        for (int i = 1; i <= n; ++i) {
            std::set<int> first = ps;
            first.insert({s, lay.d_top(l), lay.s_top(l), lay.u(l, i, 1)});
            int prev = add(first, node_b);
            for (int j = 2; j <= n; ++j) {
                std::set<int> bag = ps;
                bag.insert({s, lay.d_top(l), lay.u(l, i, j - 1), lay.u(l, i, j)});
                prev = add(bag, prev);
            }
        }
    }
    return d;
}

// Width 8 path for the subdivided checking gadget plus clock.
Decomposition path_decomp_np(const ReductionOutput& r) {
    struct VariationLayout {
        int n, k;
        int block_size() const { return 2 * n * n + 4; }
        int s_top(int l) const { return (l - 1) * block_size(); }
        int u(int l, int i, int j) const { return s_top(l) + 1 + (i - 1) * 2 * n + 2 * (j - 1); }
        int uprime(int l, int i, int j) const { return u(l, i, j) + 1; }
        int d_top(int l) const { return s_top(l) + 1 + 2 * n * n; }
        int p(int l, int b) const { return d_top(l) + b; }
        int s_global() const { return k * block_size(); }
        int total() const { return k * block_size() + 1; }
    } lay{r.source_n, r.source_k};
    int n = lay.n, k = lay.k;
    int h1 = lay.total(), h2 = h1 + 1;
    auto z = [&](int j) { return h1 + 2 + 3 * (j - 1); };
    auto y = [&](int j) { return h1 + 3 + 3 * (j - 1); };
    auto b = [&](int j) { return h1 + 4 + 3 * (j - 1); };
    std::set<int> res{lay.s_global(), h1, h2};

    Decomposition d;
    d.kind = DecompKind::Path;
    for (int l = 1; l <= k; ++l)
        for (int i = 1; i <= n; ++i) {
            std::vector<int> row{lay.s_top(l)};
            for (int j = 1; j <= n; ++j) {
                row.push_back(lay.u(l, i, j));
                row.push_back(lay.uprime(l, i, j));
            }
            row.push_back(lay.d_top(l));
            for (size_t t = 0; t + 1 < row.size(); ++t) {
                std::set<int> bag = res;
                bag.insert({lay.s_top(l), lay.d_top(l), lay.p(l, 1), lay.p(l, 2)});
                bag.insert(row[t]);
                bag.insert(row[t + 1]);
                d.bags.push_back(bag_of(bag));
            }
        }
    for (int j = 1; j <= n - 1; ++j) {
        std::set<int> bag = res;
        bag.insert({z(j), y(j), b(j)});
        d.bags.push_back(bag_of(bag));
    }
    return d;
}

// Width 5 tree for the same graph.
Decomposition tree_decomp_np(const ReductionOutput& r) {
    struct VariationLayout {
        int n, k;
        int block_size() const { return 2 * n * n + 4; }
        int s_top(int l) const { return (l - 1) * block_size(); }
        int u(int l, int i, int j) const { return s_top(l) + 1 + (i - 1) * 2 * n + 2 * (j - 1); }
        int uprime(int l, int i, int j) const { return u(l, i, j) + 1; }
        int d_top(int l) const { return s_top(l) + 1 + 2 * n * n; }
        int p(int l, int b) const { return d_top(l) + b; }
        int s_global() const { return k * block_size(); }
        int total() const { return k * block_size() + 1; }
    } lay{r.source_n, r.source_k};
    int n = lay.n, k = lay.k;
    int s = lay.s_global();
    int h1 = lay.total(), h2 = h1 + 1;
    auto z = [&](int j) { return h1 + 2 + 3 * (j - 1); };
    auto y = [&](int j) { return h1 + 3 + 3 * (j - 1); };
    auto b = [&](int j) { return h1 + 4 + 3 * (j - 1); };

    Decomposition d;
    d.kind = DecompKind::Tree;
    auto add = [&](std::set<int> bag, int parent) {
        d.bags.push_back(bag_of(std::move(bag)));
        d.parent.push_back(parent);
        return static_cast<int>(d.bags.size()) - 1;
    };

    int root = add({h1, h2, s}, -1);
    for (int j = 1; j <= n - 1; ++j) {
        int nj = add({h1, h2, z(j), y(j)}, root);
        add({z(j), y(j), b(j)}, nj);
    }
    for (int l = 1; l <= k; ++l) {
        int x1 = add({h1, h2, lay.p(l, 1), lay.p(l, 2), s}, root);
        int x2 = add({lay.p(l, 1), lay.p(l, 2), lay.s_top(l), lay.d_top(l), s}, x1);
        for (int i = 1; i <= n; ++i) {
            std::vector<int> row{lay.s_top(l)};
            for (int j = 1; j <= n; ++j) {
                row.push_back(lay.u(l, i, j));
                row.push_back(lay.uprime(l, i, j));
            }
            row.push_back(lay.d_top(l));
            int prev = x2;
            for (size_t t = 0; t + 1 < row.size(); ++t) {
                std::set<int> bag{lay.p(l, 1), lay.p(l, 2), lay.d_top(l), s};
                bag.insert(row[t]);
                bag.insert(row[t + 1]);
                prev = add(std::move(bag), prev);
            }
        }
    }
    return d;
}

} // namespace

Decomposition build_decomposition(const ReductionOutput& r, DecompKind kind) {
    const std::string& id = r.builder;
    if ((id == "ts-path" || id == "dts-path") && kind == DecompKind::Path)
        return path_decomp_validator_path(r);
    if (id == "ts-cycle" && kind == DecompKind::Path) return path_decomp_cycle_global(r);
    if (id == "dts-cycle" && kind == DecompKind::Path)
        return r.source_k <= 2 ? path_decomp_cycle_junction(r) : path_decomp_cycle_global(r);
    if ((id == "ts-cycle" || id == "dts-cycle") && kind == DecompKind::Tree)
        return tree_decomp_cycle(r);
    if (id == "np-fixed-tw" && kind == DecompKind::Path) return path_decomp_np(r);
    if (id == "np-fixed-tw" && kind == DecompKind::Tree) return tree_decomp_np(r);
    throw std::invalid_argument("no decomposition recipe for builder '" + id + "'");
}

Decomposition lift_decomposition(const Decomposition& d, const ReductionOutput& original,
                                 const ReductionOutput& lifted) {
    const std::string& b = lifted.builder;
    auto ends_with = [&](const char* suffix) {
        std::string s(suffix);
        return b.size() >= s.size() && b.compare(b.size() - s.size(), s.size(), s) == 0;
    };

    Decomposition out;
    out.kind = d.kind;

    if (ends_with("+lift-undirected")) {
        int dv = lifted.anchors.at("d");
        int dpv = lifted.anchors.at("d'");
        auto comps = blue_components(original.instance.graph);
        out.bags = d.bags;
        out.parent = d.parent;
        for (auto& bag : out.bags) bag.push_back(dv);
        for (size_t c = 0; c < comps.size(); ++c) {
            int dc = lifted.anchors.at("d_C" + std::to_string(c + 1));
            int dcp = lifted.anchors.at("d'_C" + std::to_string(c + 1));
            if (d.kind == DecompKind::Path) {
                auto [lo, hi] = d.property2_ranges.at(comp_id(static_cast<int>(c)));
                for (int x = lo; x <= hi; ++x) {
                    out.bags[x].push_back(dc);
                    out.bags[x].push_back(dcp);
                }
            } else {
                auto ch = children_of(d);
                int rootnode = d.property2_roots.at(comp_id(static_cast<int>(c)));
                for (int x : subtree_nodes(rootnode, ch)) {
                    out.bags[x].push_back(dc);
                    out.bags[x].push_back(dcp);
                }
            }
        }
        out.bags.push_back({dv, dpv});
        if (d.kind == DecompKind::Tree) {
            int root = 0;
            for (size_t x = 0; x < d.parent.size(); ++x)
                if (d.parent[x] == -1) root = static_cast<int>(x);
            out.parent.push_back(root);
        }
        for (auto& bag : out.bags) std::sort(bag.begin(), bag.end());
        return out;
    }

    if (ends_with("+lift-directed")) {
        int dv = lifted.anchors.at("d");
        out = d;
        out.property2_ranges.clear();
        out.property2_roots.clear();
        for (auto& bag : out.bags) {
            bag.push_back(dv);
            std::sort(bag.begin(), bag.end());
        }
        return out;
    }

    if (ends_with("+lift-tw-preserving")) {
        const Graph& g = original.instance.graph;
        std::vector<int> blue = g.blue_vertices();
        int n = g.vertex_count();
        if (d.kind == DecompKind::Tree) {
            out.bags = d.bags;
            out.parent = d.parent;
            for (size_t i = 0; i < blue.size(); ++i) {
                int host = -1;
                for (size_t x = 0; x < d.bags.size() && host < 0; ++x)
                    if (std::find(d.bags[x].begin(), d.bags[x].end(), blue[i]) != d.bags[x].end())
                        host = static_cast<int>(x);
                out.bags.push_back({blue[i], n + static_cast<int>(i)});
                out.parent.push_back(host);
            }
            return out;
        }
        // Path: duplicate the first bag holding v, adding one prime per copy.
        std::vector<std::vector<int>> adds(d.bags.size());
        for (size_t i = 0; i < blue.size(); ++i)
            for (size_t x = 0; x < d.bags.size(); ++x)
                if (std::find(d.bags[x].begin(), d.bags[x].end(), blue[i]) != d.bags[x].end()) {
                    adds[x].push_back(n + static_cast<int>(i));
                    break;
                }
        for (size_t x = 0; x < d.bags.size(); ++x) {
            out.bags.push_back(d.bags[x]);
            for (int vp : adds[x]) {
                auto bag = d.bags[x];
                bag.push_back(vp);
                std::sort(bag.begin(), bag.end());
                out.bags.push_back(std::move(bag));
            }
        }
        return out;
    }

    throw std::invalid_argument("unknown lift transform for builder '" + b + "'");
}

} // namespace dsr
