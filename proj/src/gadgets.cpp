#include "dsr/gadgets.hpp"

#include <algorithm>
#include <set>

#include "dsr/decomp.hpp"

namespace dsr {

namespace {

std::string idx2(const char* base, int l, int i, int j) {
    return std::string(base) + "^" + std::to_string(l) + "_{" + std::to_string(i) + "," +
           std::to_string(j) + "}";
}

std::string sup(const char* base, int l) { return std::string(base) + "^" + std::to_string(l); }

std::string sub(const char* base, int j) { return std::string(base) + "_" + std::to_string(j); }

void require_source(const Graph& g, int k) {
    if (g.directed()) throw VariantError("reductions start from an undirected source graph");
    if (g.vertex_count() < 1) throw std::invalid_argument("source graph must be non-empty");
    if (k < 1) throw std::invalid_argument("k must be at least 1");
}

// v_i dominates v_j in the source graph (1-based row/column indices).
bool row_dominates(const Graph& g, int i, int j) {
    return i == j || g.has_undirected_edge(i - 1, j - 1);
}

struct GadgetParts {
    std::vector<std::pair<int, int>> edges;
    std::vector<Color> colors;
    std::map<std::string, int> anchors;
    std::vector<int> start, target;
};

// Core validator content. Directed mode orients row paths forward and every
// blue-to-red contact from blue to red. The s^l and d^l columns keep the
// global vertex s dominated while tokens sit on them.
GadgetParts validator_parts(const Graph& g, int k, bool directed) {
    require_source(g, k);
    int n = g.vertex_count();
    ValidatorLayout lay{n, k};

    GadgetParts parts;
    parts.colors.assign(lay.total(), Color::Blue);
    int s = lay.s_global();
    parts.colors[s] = Color::Red;
    parts.anchors["s"] = s;

    for (int l = 1; l <= k; ++l) {
        parts.anchors[sup("s", l)] = lay.s_top(l);
        parts.anchors[sup("d", l)] = lay.d_top(l);
        for (int b = 0; b < 3; ++b) {
            parts.colors[lay.p(l, b)] = Color::Red;
            parts.anchors[sup("p", l) + "_" + std::to_string(b)] = lay.p(l, b);
        }
        parts.start.push_back(lay.s_top(l));
        parts.target.push_back(lay.d_top(l));

        parts.edges.emplace_back(lay.s_top(l), lay.p(l, 0));
        parts.edges.emplace_back(lay.s_top(l), lay.p(l, 1));
        parts.edges.emplace_back(lay.d_top(l), lay.p(l, (n + 1) % 3));
        parts.edges.emplace_back(lay.d_top(l), lay.p(l, (n + 2) % 3));
        parts.edges.emplace_back(lay.s_top(l), s);
        parts.edges.emplace_back(lay.d_top(l), s);

        for (int i = 1; i <= n; ++i) {
            for (int j = 0; j <= n; ++j)
                parts.edges.emplace_back(lay.u(l, i, j), lay.u(l, i, j + 1));
            for (int j = 1; j <= n; ++j) {
                int u = lay.u(l, i, j);
                parts.anchors[idx2("u", l, i, j)] = u;
                parts.edges.emplace_back(u, lay.p(l, j % 3));
                parts.edges.emplace_back(u, lay.p(l, (j + 1) % 3));
                if (row_dominates(g, i, j)) parts.edges.emplace_back(u, s);
            }
        }
    }
    (void)directed; // orientation is already tail-to-head in the pairs above
    return parts;
}

ReductionOutput finish(GadgetParts parts, int n_total, bool directed, Variant variant,
                       std::string builder, const Graph& g, int k) {
    ReductionOutput out;
    out.instance =
        ReconfigInstance{Graph(n_total, std::move(parts.edges), directed, std::move(parts.colors)),
                         variant, std::move(parts.start), std::move(parts.target), std::nullopt};
    out.anchors = std::move(parts.anchors);
    out.builder = std::move(builder);
    out.source_n = g.vertex_count();
    out.source_k = k;
    return out;
}

// Shared body of the four validator-based reductions. `cyclic` selects the
// 3-cycle clock instead of the (n+2)-path.
ReductionOutput build_validator_reduction(const Graph& g, int k, bool directed, bool cyclic) {
    GadgetParts parts = validator_parts(g, k, directed);
    int n = g.vertex_count();
    ValidatorLayout lay{n, k};
    int hbase = lay.total();
    int hcount = cyclic ? 3 : n + 2;

    for (int t = 0; t < hcount; ++t) {
        parts.colors.push_back(Color::Blue);
        parts.anchors[sub("h", t)] = hbase + t;
    }
    if (cyclic) {
        parts.edges.emplace_back(hbase + 0, hbase + 1);
        parts.edges.emplace_back(hbase + 1, hbase + 2);
        parts.edges.emplace_back(hbase + 2, hbase + 0);
        for (int l = 1; l <= k; ++l)
            for (int a = 0; a < 3; ++a) {
                parts.edges.emplace_back(hbase + a, lay.p(l, a));
                parts.edges.emplace_back(hbase + a, lay.p(l, (a + 2) % 3));
            }
        parts.start.push_back(hbase + 0);
        parts.target.push_back(hbase + (n + 1) % 3);
    } else {
        for (int t = 0; t + 1 < hcount; ++t) parts.edges.emplace_back(hbase + t, hbase + t + 1);
        for (int l = 1; l <= k; ++l)
            for (int j = 0; j <= n + 1; ++j) {
                parts.edges.emplace_back(hbase + j, lay.p(l, j % 3));
                parts.edges.emplace_back(hbase + j, lay.p(l, (j + 2) % 3));
            }
        parts.start.push_back(hbase + 0);
        parts.target.push_back(hbase + n + 1);
    }

    std::string id = std::string(directed ? "dts" : "ts") + (cyclic ? "-cycle" : "-path");
    ReductionOutput out = finish(std::move(parts), hbase + hcount, directed,
                                 directed ? Variant::DTS : Variant::TS, id, g, k);
    out.claims.property1 = true;
    out.claims.property2 = true;
    if (!cyclic) {
        out.claims.pathwidth = 3 * k + 4;
        if (!directed) out.instance.iteration_bound = 1;
        if (directed) out.claims.dag = true;
    } else {
        out.claims.treewidth = 6;
        if (!directed) {
            out.claims.pathwidth = 10;
        } else {
            // The junction-ordered recipe reaches the stated bound of 9 for
            // k <= 2; for larger k the certified layout has width 10.
            out.claims.pathwidth = k <= 2 ? 9 : 10;
            out.claims.dfvs = 1;
        }
    }
    return out;
}

} // namespace

ReductionOutput build_validator(const Graph& g, int k) {
    GadgetParts parts = validator_parts(g, k, false);
    ValidatorLayout lay{g.vertex_count(), k};
    ReductionOutput out =
        finish(std::move(parts), lay.total(), false, Variant::TS, "validator", g, k);
    out.claims.property1 = true;
    return out;
}

bool validator_selection_dominates(const ReductionOutput& validator_output,
                                   std::span<const int> rows, int j) {
    ValidatorLayout lay{validator_output.source_n, validator_output.source_k};
    if (static_cast<int>(rows.size()) != lay.k)
        throw std::invalid_argument("row selection size must equal k");
    if (j < 0 || j >= lay.n) throw std::out_of_range("column index out of range");
    const Graph& h = validator_output.instance.graph;
    for (int l = 1; l <= lay.k; ++l) {
        int row = rows[l - 1];
        if (row < 0 || row >= lay.n) throw std::out_of_range("row index out of range");
        if (h.has_undirected_edge(lay.u(l, row + 1, j + 1), lay.s_global())) return true;
    }
    return false;
}

bool validator_selection_dominates(const Graph& g, int k, std::span<const int> rows, int j) {
    return validator_selection_dominates(build_validator(g, k), rows, j);
}

ReductionOutput build_ts_path(const Graph& g, int k) {
    return build_validator_reduction(g, k, false, false);
}

ReductionOutput build_ts_cycle(const Graph& g, int k) {
    return build_validator_reduction(g, k, false, true);
}

ReductionOutput build_dts_path(const Graph& g, int k) {
    return build_validator_reduction(g, k, true, false);
}

ReductionOutput build_dts_cycle(const Graph& g, int k) {
    return build_validator_reduction(g, k, true, true);
}

ReductionOutput build_dag_depth3(const Graph& g, int k, bool repair) {
    require_source(g, k);
    int n = g.vertex_count();
    auto s_i = [&](int i) { return i - 1; };
    auto d_i = [&](int i) { return k + i - 1; };
    auto b_i = [&](int i) { return 2 * k + i - 1; };
    auto copy = [&](int v, int i) { return 3 * k + v * (k + 1) + i; };
    int abase = 3 * k + n * (k + 1);
    auto a = [&](int t) { return abase + t - 1; };
    int total = abase + 7;

    GadgetParts parts;
    for (int i = 1; i <= k; ++i) {
        parts.anchors[sub("s", i)] = s_i(i);
        parts.anchors[sub("d", i)] = d_i(i);
        parts.anchors[sub("b", i)] = b_i(i);
    }
    for (int v = 0; v < n; ++v)
        for (int i = 0; i <= k; ++i)
            parts.anchors["v" + std::to_string(v + 1) + "_" + std::to_string(i)] = copy(v, i);
    for (int t = 1; t <= 7; ++t) parts.anchors[sub("a", t)] = a(t);

    auto& e = parts.edges;
    e.emplace_back(a(3), a(4));
    e.emplace_back(a(5), a(6));
    e.emplace_back(a(6), a(4));
    e.emplace_back(a(5), a(7));
    for (int i = 1; i <= k; ++i) e.emplace_back(a(7), b_i(i));
    for (int v = 0; v < n; ++v) e.emplace_back(copy(v, 0), a(3));
    for (int i = 1; i <= k; ++i)
        for (int v = 0; v < n; ++v) {
            e.emplace_back(s_i(i), copy(v, i));
            e.emplace_back(copy(v, i), d_i(i));
            e.emplace_back(copy(v, i), a(1));
            e.emplace_back(copy(v, i), b_i(i));
            e.emplace_back(copy(v, 0), d_i(i));
        }
    for (int i = 1; i <= k; ++i)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (row_dominates(g, u + 1, v + 1)) e.emplace_back(copy(u, 0), copy(v, i));
    if (repair)
        for (int i = 1; i <= k; ++i) {
            e.emplace_back(s_i(i), d_i(i));
            e.emplace_back(s_i(i), b_i(i));
        }

    for (int i = 1; i <= k; ++i) parts.start.push_back(s_i(i));
    for (int t : {1, 2, 3, 5}) parts.start.push_back(a(t));
    for (int i = 1; i <= k; ++i) parts.target.push_back(d_i(i));
    for (int t : {1, 2, 4, 7}) parts.target.push_back(a(t));

    ReductionOutput out;
    out.instance = ReconfigInstance{Graph(total, std::move(parts.edges), true, std::nullopt),
                                    Variant::DTS, std::move(parts.start),
                                    std::move(parts.target), std::nullopt};
    out.anchors = std::move(parts.anchors);
    out.builder = "dag-depth3";
    out.source_n = n;
    out.source_k = k;
    out.claims.depth = 3;
    out.claims.dag = true;
    if (!repair) out.defect_flags.push_back("S-not-dominating (d_i, b_i uncovered)");
    return out;
}

namespace {

// Per-level block of the subdivided directed checking gadget:
// [s^l | u/u' rows | d^l | p^l_1 p^l_2], then one global s.
struct VariationLayout {
    int n = 0;
    int k = 0;
    int block_size() const { return 2 * n * n + 4; }
    int s_top(int l) const { return (l - 1) * block_size(); }
    int u(int l, int i, int j) const { return s_top(l) + 1 + (i - 1) * 2 * n + 2 * (j - 1); }
    int uprime(int l, int i, int j) const { return u(l, i, j) + 1; }
    int d_top(int l) const { return s_top(l) + 1 + 2 * n * n; }
    int p(int l, int b) const { return d_top(l) + b; } // b in {1,2}
    int s_global() const { return k * block_size(); }
    int total() const { return k * block_size() + 1; }
};

GadgetParts variation_parts(const Graph& g, int k) {
    require_source(g, k);
    int n = g.vertex_count();
    VariationLayout lay{n, k};

    GadgetParts parts;
    parts.colors.assign(lay.total(), Color::Blue);
    int s = lay.s_global();
    parts.colors[s] = Color::Red;
    parts.anchors["s"] = s;

    auto& e = parts.edges;
    for (int l = 1; l <= k; ++l) {
        parts.anchors[sup("s", l)] = lay.s_top(l);
        parts.anchors[sup("d", l)] = lay.d_top(l);
        for (int b : {1, 2}) {
            parts.colors[lay.p(l, b)] = Color::Red;
            parts.anchors[sup("p", l) + "_" + std::to_string(b)] = lay.p(l, b);
            e.emplace_back(lay.s_top(l), lay.p(l, b));
            e.emplace_back(lay.d_top(l), lay.p(l, b));
        }
        e.emplace_back(lay.s_top(l), s);
        e.emplace_back(lay.d_top(l), s);
        parts.start.push_back(lay.s_top(l));
        parts.target.push_back(lay.d_top(l));

        for (int i = 1; i <= n; ++i) {
            e.emplace_back(lay.s_top(l), lay.u(l, i, 1));
            for (int j = 1; j <= n; ++j) {
                int u = lay.u(l, i, j), up = lay.uprime(l, i, j);
                parts.anchors[idx2("u", l, i, j)] = u;
                parts.anchors[idx2("u'", l, i, j)] = up;
                e.emplace_back(u, up);
                if (j < n) e.emplace_back(up, lay.u(l, i, j + 1));
                if (j == n) e.emplace_back(up, lay.d_top(l));
                if (row_dominates(g, i, j)) {
                    e.emplace_back(u, s);
                    e.emplace_back(up, s);
                }
                e.emplace_back(u, lay.p(l, j % 2 == 1 ? 1 : 2));
                e.emplace_back(up, lay.p(l, 1));
                e.emplace_back(up, lay.p(l, 2));
            }
        }
    }
    return parts;
}

} // namespace

ReductionOutput build_variation_checking(const Graph& g, int k) {
    GadgetParts parts = variation_parts(g, k);
    VariationLayout lay{g.vertex_count(), k};
    ReductionOutput out =
        finish(std::move(parts), lay.total(), true, Variant::DTS, "variation-checking", g, k);
    out.claims.dag = true;
    return out;
}

ReductionOutput build_clock_battery(int n) {
    if (n < 2) throw std::invalid_argument("clock-with-battery requires n >= 2");
    GadgetParts parts;
    int h1 = 0, h2 = 1;
    auto z = [](int j) { return 2 + 3 * (j - 1); };
    auto y = [](int j) { return 3 + 3 * (j - 1); };
    auto b = [](int j) { return 4 + 3 * (j - 1); };
    int total = 2 + 3 * (n - 1);

    parts.colors.assign(total, Color::Blue);
    parts.anchors["h_1"] = h1;
    parts.anchors["h_2"] = h2;
    parts.start.push_back(h2);
    parts.target.push_back(n % 2 == 0 ? h1 : h2);
    for (int j = 1; j <= n - 1; ++j) {
        parts.colors[b(j)] = Color::Red;
        parts.anchors[sub("z", j)] = z(j);
        parts.anchors[sub("y", j)] = y(j);
        parts.anchors[sub("b", j)] = b(j);
        parts.edges.emplace_back(z(j), b(j));
        parts.edges.emplace_back(y(j), b(j));
        parts.edges.emplace_back(h1, z(j));
        parts.edges.emplace_back(h2, z(j));
        parts.edges.emplace_back(y(j), h1);
        parts.edges.emplace_back(y(j), h2);
        parts.start.push_back(y(j));
        parts.target.push_back(z(j));
    }

    ReductionOutput out;
    out.instance = ReconfigInstance{Graph(total, std::move(parts.edges), true, std::move(parts.colors)),
                                    Variant::DTS, std::move(parts.start),
                                    std::move(parts.target), std::nullopt};
    out.anchors = std::move(parts.anchors);
    out.builder = "clock-battery";
    out.source_n = n;
    out.source_k = 0;
    out.claims.dag = true;
    return out;
}

ReductionOutput build_np_fixed_tw(const Graph& g, int k) {
    require_source(g, k);
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("np-fixed-tw requires a source graph with n >= 2");

    GadgetParts parts = variation_parts(g, k);
    VariationLayout lay{n, k};
    ReductionOutput clock = build_clock_battery(n);
    int offset = lay.total();

    for (int v = 0; v < clock.instance.graph.vertex_count(); ++v)
        parts.colors.push_back(clock.instance.graph.color(v));
    for (auto [u, v] : clock.instance.graph.edges()) parts.edges.emplace_back(u + offset, v + offset);
    for (const auto& [name, v] : clock.anchors) parts.anchors[name] = v + offset;
    for (int v : clock.instance.start) parts.start.push_back(v + offset);
    for (int v : clock.instance.target) parts.target.push_back(v + offset);

    int h1 = offset, h2 = offset + 1;
    for (int l = 1; l <= k; ++l) {
        parts.edges.emplace_back(h1, lay.p(l, 1));
        parts.edges.emplace_back(h2, lay.p(l, 2));
    }

    ReductionOutput out = finish(std::move(parts), offset + clock.instance.graph.vertex_count(),
                                 true, Variant::DTS, "np-fixed-tw", g, k);
    out.claims.dag = true;
    out.claims.pathwidth = 8;
    out.claims.treewidth = 5;
    return out;
}

namespace {

// Shared column-sweep witness for the validator-based reductions. Tokens
// enter their chosen rows, then columns advance in lock-step with the h
// clock; the first mover per column is one whose next vertex keeps the
// global vertex s dominated.
LabeledSequence validator_witness(const Graph& g, int k, std::span<const int> ds, bool cyclic) {
    require_source(g, k);
    if (static_cast<int>(ds.size()) != k)
        throw PreconditionError("witness requires exactly k row choices");
    for (int v : ds) g.check_vertex(v);
    if (!is_dominating(g, ds)) throw PreconditionError("selected set does not dominate the source");

    int n = g.vertex_count();
    ValidatorLayout lay{n, k};
    int hbase = lay.total();

    LabeledSequence seq;
    for (int l = 1; l <= k; ++l) seq.initial.push_back(lay.s_top(l));
    seq.initial.push_back(hbase + 0); // h token is the last one
    int h_token = k;

    auto h_vertex = [&](int j) { return cyclic ? hbase + j % 3 : hbase + j; };

    for (int c = 1; c <= n + 1; ++c) {
        int first = 1;
        if (c <= n) {
            while (first <= k && !row_dominates(g, ds[first - 1] + 1, c)) ++first;
            if (first > k) throw PreconditionError("no row choice dominates column");
        }
        std::vector<int> order{first};
        for (int l = 1; l <= k; ++l)
            if (l != first) order.push_back(l);
        for (int l : order) {
            int row = ds[l - 1] + 1;
            seq.moves.push_back({l - 1, lay.u(l, row, c - 1), lay.u(l, row, c)});
        }
        seq.moves.push_back({h_token, h_vertex(c - 1), h_vertex(c)});
    }
    return seq;
}

} // namespace

LabeledSequence build_witness_ts_path(const Graph& g, int k, std::span<const int> ds) {
    return validator_witness(g, k, ds, false);
}

LabeledSequence build_witness_ts_cycle(const Graph& g, int k, std::span<const int> ds) {
    return validator_witness(g, k, ds, true);
}

LabeledSequence build_witness_dts_path(const Graph& g, int k, std::span<const int> ds) {
    return validator_witness(g, k, ds, false);
}

LabeledSequence build_witness_dts_cycle(const Graph& g, int k, std::span<const int> ds) {
    return validator_witness(g, k, ds, true);
}

LabeledSequence build_witness_dag_depth3(const Graph& g, int k, std::span<const int> ds) {
    require_source(g, k);
    if (static_cast<int>(ds.size()) != k)
        throw PreconditionError("witness requires exactly k chosen vertices");
    for (int v : ds) g.check_vertex(v);
    if (!is_dominating(g, ds)) throw PreconditionError("selected set does not dominate the source");

    int n = g.vertex_count();
    auto s_i = [&](int i) { return i - 1; };
    auto d_i = [&](int i) { return k + i - 1; };
    auto copy = [&](int v, int i) { return 3 * k + v * (k + 1) + i; };
    int abase = 3 * k + n * (k + 1);

    LabeledSequence seq;
    for (int i = 1; i <= k; ++i) seq.initial.push_back(s_i(i));
    for (int t : {1, 2, 3, 5}) seq.initial.push_back(abase + t - 1);
    int tok_a3 = k + 2, tok_a5 = k + 3;

    for (int i = 1; i <= k; ++i) seq.moves.push_back({i - 1, s_i(i), copy(ds[i - 1], i)});
    seq.moves.push_back({tok_a3, abase + 2, abase + 3}); // a_3 -> a_4
    seq.moves.push_back({tok_a5, abase + 4, abase + 6}); // a_5 -> a_7
    for (int i = 1; i <= k; ++i) seq.moves.push_back({i - 1, copy(ds[i - 1], i), d_i(i)});
    return seq;
}

namespace {

void require_colored(const ReductionOutput& r, Variant variant, const char* what) {
    if (!r.instance.graph.colored())
        throw PreconditionError(std::string(what) + " requires a colored instance");
    if (r.instance.variant != variant)
        throw PreconditionError(std::string(what) + " requires the " +
                                (variant == Variant::TS ? "TS" : "DTS") + " variant");
}

void require_blue_to_red(const Graph& g, const char* what) {
    for (auto [u, v] : g.edges())
        if (g.is_red(u))
            throw PreconditionError(std::string(what) +
                                    " requires every arc to leave a blue vertex");
}

} // namespace

ReductionOutput lift_redblue_undirected(const ReductionOutput& r) {
    require_colored(r, Variant::TS, "undirected lift");
    if (!check_property1(r.instance))
        throw PreconditionError("undirected lift requires one start and one target "
                                "vertex per blue component");

    const Graph& g = r.instance.graph;
    int n = g.vertex_count();
    auto comps = blue_components(g);
    int total = n + 2 + 2 * static_cast<int>(comps.size());
    int d = n, dprime = n + 1;

    std::vector<std::pair<int, int>> edges = g.edges();
    edges.emplace_back(d, dprime);
    for (int v = 0; v < n; ++v)
        if (g.is_blue(v)) edges.emplace_back(d, v);
    for (size_t c = 0; c < comps.size(); ++c) {
        int dc = n + 2 + 2 * static_cast<int>(c), dcp = dc + 1;
        for (int v : comps[c]) {
            edges.emplace_back(dc, v);
            edges.emplace_back(dcp, v);
        }
    }

    ReductionOutput out;
    std::vector<int> start = r.instance.start, target = r.instance.target;
    start.push_back(d);
    target.push_back(d);
    out.instance = ReconfigInstance{Graph(total, std::move(edges), false, std::nullopt),
                                    Variant::TS, std::move(start), std::move(target),
                                    r.instance.iteration_bound};
    out.anchors = r.anchors;
    out.anchors["d"] = d;
    out.anchors["d'"] = dprime;
    for (size_t c = 0; c < comps.size(); ++c) {
        out.anchors["d_C" + std::to_string(c + 1)] = n + 2 + 2 * static_cast<int>(c);
        out.anchors["d'_C" + std::to_string(c + 1)] = n + 3 + 2 * static_cast<int>(c);
    }
    out.builder = r.builder + "+lift-undirected";
    out.source_n = r.source_n;
    out.source_k = r.source_k;
    if (r.claims.pathwidth) out.claims.pathwidth = *r.claims.pathwidth + 3;
    if (r.claims.treewidth) out.claims.treewidth = *r.claims.treewidth + 3;
    return out;
}

ReductionOutput lift_redblue_directed(const ReductionOutput& r) {
    require_colored(r, Variant::DTS, "directed lift");
    require_blue_to_red(r.instance.graph, "directed lift");

    const Graph& g = r.instance.graph;
    int n = g.vertex_count();
    int d = n;
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int v = 0; v < n; ++v)
        if (g.is_blue(v)) edges.emplace_back(d, v);

    ReductionOutput out;
    std::vector<int> start = r.instance.start, target = r.instance.target;
    start.push_back(d);
    target.push_back(d);
    out.instance = ReconfigInstance{Graph(n + 1, std::move(edges), true, std::nullopt),
                                    Variant::DTS, std::move(start), std::move(target),
                                    r.instance.iteration_bound};
    out.anchors = r.anchors;
    out.anchors["d"] = d;
    out.builder = r.builder + "+lift-directed";
    out.source_n = r.source_n;
    out.source_k = r.source_k;
    if (r.claims.pathwidth) out.claims.pathwidth = *r.claims.pathwidth + 1;
    if (r.claims.treewidth) out.claims.treewidth = *r.claims.treewidth + 1;
    out.claims.dfvs = r.claims.dfvs;
    out.claims.dag = r.claims.dag;
    return out;
}

ReductionOutput lift_redblue_directed_tw_preserving(const ReductionOutput& r) {
    require_colored(r, Variant::DTS, "tw-preserving lift");
    require_blue_to_red(r.instance.graph, "tw-preserving lift");

    const Graph& g = r.instance.graph;
    int n = g.vertex_count();
    std::vector<int> blue = g.blue_vertices();
    std::vector<std::pair<int, int>> edges = g.edges();

    std::map<int, std::string> names;
    for (const auto& [name, v] : r.anchors) names[v] = name;

    ReductionOutput out;
    out.anchors = r.anchors;
    std::vector<int> start = r.instance.start, target = r.instance.target;
    for (size_t i = 0; i < blue.size(); ++i) {
        int vp = n + static_cast<int>(i);
        edges.emplace_back(vp, blue[i]);
        start.push_back(vp);
        target.push_back(vp);
        std::string base = names.count(blue[i]) ? names[blue[i]] : "v" + std::to_string(blue[i]);
        out.anchors[base + "'"] = vp;
    }
    out.instance = ReconfigInstance{
        Graph(n + static_cast<int>(blue.size()), std::move(edges), true, std::nullopt),
        Variant::DTS, std::move(start), std::move(target), r.instance.iteration_bound};
    out.builder = r.builder + "+lift-tw-preserving";
    out.source_n = r.source_n;
    out.source_k = r.source_k;
    if (r.claims.pathwidth) out.claims.pathwidth = *r.claims.pathwidth + 1;
    out.claims.treewidth = r.claims.treewidth;
    out.claims.dag = r.claims.dag;
    return out;
}

ReductionOutput build_by_id(const std::string& id, const Graph& g, int k, bool repair) {
    if (id == "ts-path") return build_ts_path(g, k);
    if (id == "ts-cycle") return build_ts_cycle(g, k);
    if (id == "dts-path") return build_dts_path(g, k);
    if (id == "dts-cycle") return build_dts_cycle(g, k);
    if (id == "dag-depth3") return build_dag_depth3(g, k, repair);
    if (id == "np-fixed-tw") return build_np_fixed_tw(g, k);
    if (id == "validator") return build_validator(g, k);
    throw std::invalid_argument("unknown gadget id: " + id);
}

std::optional<LabeledSequence> build_witness_by_id(const std::string& id, const Graph& g,
                                                   int k, std::span<const int> ds) {
    if (id == "ts-path") return build_witness_ts_path(g, k, ds);
    if (id == "ts-cycle") return build_witness_ts_cycle(g, k, ds);
    if (id == "dts-path") return build_witness_dts_path(g, k, ds);
    if (id == "dts-cycle") return build_witness_dts_cycle(g, k, ds);
    if (id == "dag-depth3") return build_witness_dag_depth3(g, k, ds);
    return std::nullopt;
}

} // namespace dsr
