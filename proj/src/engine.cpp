#include "dsr/engine.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace dsr {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_valid(const ReconfigInstance& inst) {
    auto errs = check_instance(inst);
    if (!errs.empty()) throw PreconditionError(errs.front());
}

// Coverage that every configuration must provide: all vertices for plain
// instances, the red vertices for colored ones.
Bitset required_mask(const Graph& g) {
    Bitset m(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.colored() ? g.is_red(v) : true) m.set(v);
    return m;
}

const std::vector<int>& slide_targets(const ReconfigInstance& inst, int u) {
    return inst.variant == Variant::TS ? inst.graph.neighbors(u)
                                       : inst.graph.out_neighbors(u);
}

// Enumerates legal single-token moves out of `config` (sorted, distinct):
// slides along edges/arcs, or hops to any free vertex under the jumping rule.
template <typename Fn>
void for_each_move(const ReconfigInstance& inst, const std::vector<int>& config,
                   const Bitset& required, bool jumping, Fn&& fn) {
    const Graph& g = inst.graph;
    int k = static_cast<int>(config.size());
    Bitset occ(g.vertex_count());
    for (int v : config) occ.set(v);
    std::vector<int> everyone;
    if (jumping)
        for (int v = 0; v < g.vertex_count(); ++v) everyone.push_back(v);
    for (int idx = 0; idx < k; ++idx) {
        int u = config[idx];
        Bitset partial(g.vertex_count());
        for (int j = 0; j < k; ++j)
            if (j != idx) partial |= g.closed_mask(config[j]);
        for (int v : jumping ? everyone : slide_targets(inst, u)) {
            if (occ.test(v)) continue;
            if (g.colored() && !g.is_blue(v)) continue;
            Bitset cover = partial;
            cover |= g.closed_mask(v);
            if (!cover.contains_all(required)) continue;
            fn(u, v);
        }
    }
}

std::vector<int> sorted_copy(std::span<const int> s) {
    std::vector<int> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> config_key(const Graph& g, const std::vector<int>& config) {
    Bitset b(g.vertex_count());
    for (int v : config) b.set(v);
    return b.words();
}

// Minimal-perturbation labelling: the moved token is the one sitting on the
// departing vertex.
LabeledSequence label_moves(const std::vector<int>& start_sorted,
                            const std::vector<std::pair<int, int>>& slides) {
    LabeledSequence seq;
    seq.initial = start_sorted;
    std::vector<int> pos = start_sorted;
    for (auto [from, to] : slides) {
        int token = static_cast<int>(std::find(pos.begin(), pos.end(), from) - pos.begin());
        pos[token] = to;
        seq.moves.push_back({token, from, to});
    }
    return seq;
}

} // namespace

std::vector<std::pair<int, int>> legal_moves(const ReconfigInstance& inst,
                                             std::span<const int> config) {
    if (config.size() != inst.start.size())
        throw std::invalid_argument("configuration arity does not match token count");
    std::vector<int> c = sorted_copy(config);
    for (int v : c) inst.graph.check_vertex(v);
    Bitset required = required_mask(inst.graph);
    std::vector<std::pair<int, int>> out;
    for_each_move(inst, c, required, false, [&](int u, int v) { out.emplace_back(u, v); });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

SolveResult bfs_search(const ReconfigInstance& inst, const EngineOptions& opts, bool jumping) {
    auto t0 = Clock::now();
    require_valid(inst);
    const Graph& g = inst.graph;
    Bitset required = required_mask(g);

    std::vector<int> start = sorted_copy(inst.start);
    std::vector<int> target = sorted_copy(inst.target);

    std::vector<std::vector<int>> configs{start};
    std::vector<int> parent{-1};
    std::vector<std::pair<int, int>> via{{-1, -1}};
    std::unordered_map<std::vector<uint64_t>, int, WordsHash> seen;
    seen.emplace(config_key(g, start), 0);

    SolveResult res;
    int goal = start == target ? 0 : -1;
    for (size_t head = 0; head < configs.size() && goal < 0; ++head) {
        if (static_cast<long long>(configs.size()) > opts.max_configurations) {
            res.outcome = Outcome::BudgetExceeded;
            res.stats.configurations = static_cast<long long>(configs.size());
            res.stats.millis = elapsed_ms(t0);
            return res;
        }
        const std::vector<int> current = configs[head];
        for_each_move(inst, current, required, jumping, [&](int u, int v) {
            if (goal >= 0) return;
            std::vector<int> next = current;
            *std::find(next.begin(), next.end(), u) = v;
            std::sort(next.begin(), next.end());
            auto key = config_key(g, next);
            if (seen.count(key)) return;
            int id = static_cast<int>(configs.size());
            seen.emplace(std::move(key), id);
            configs.push_back(std::move(next));
            parent.push_back(static_cast<int>(head));
            via.emplace_back(u, v);
            if (configs[id] == target) goal = id;
        });
    }

    res.stats.configurations = static_cast<long long>(configs.size());
    if (goal >= 0) {
        std::vector<std::pair<int, int>> slides;
        for (int node = goal; parent[node] != -1; node = parent[node])
            slides.push_back(via[node]);
        std::reverse(slides.begin(), slides.end());
        res.outcome = Outcome::Reachable;
        res.sequence = label_moves(start, slides);
        res.stats.move_count = static_cast<long long>(slides.size());
    } else {
        res.outcome = Outcome::Unreachable;
    }
    res.stats.millis = elapsed_ms(t0);
    return res;
}

} // namespace

SolveResult reachable(const ReconfigInstance& inst, const EngineOptions& opts) {
    return bfs_search(inst, opts, false);
}

SolveResult reachable_token_jumping(const ReconfigInstance& inst, const EngineOptions& opts) {
    return bfs_search(inst, opts, true);
}

SequenceCheck validate_sequence(const ReconfigInstance& inst, const LabeledSequence& seq) {
    const Graph& g = inst.graph;
    int k = static_cast<int>(inst.start.size());
    if (static_cast<int>(seq.initial.size()) != k)
        return {false, -1, "arity", "initial assignment size differs from token count"};

    std::vector<int> pos = seq.initial;
    if (sorted_copy(pos) != sorted_copy(inst.start))
        return {false, -1, "initial", "initial assignment is not a bijection onto the start set"};

    Bitset required = required_mask(g);
    auto dominated = [&](const std::vector<int>& p) {
        Bitset cover(g.vertex_count());
        for (int v : p) cover |= g.closed_mask(v);
        return cover.contains_all(required);
    };
    auto blue_ok = [&](int v) { return !g.colored() || g.is_blue(v); };

    for (int v : pos)
        if (!blue_ok(v)) return {false, -1, "blue-only", "token starts on a red vertex"};
    if (!dominated(pos)) return {false, -1, "domination", "start configuration does not dominate"};

    for (size_t i = 0; i < seq.moves.size(); ++i) {
        const Move& m = seq.moves[i];
        int idx = static_cast<int>(i);
        if (m.token < 0 || m.token >= k)
            return {false, idx, "arity", "token index out of range"};
        if (m.to < 0 || m.to >= g.vertex_count() || m.from < 0 || m.from >= g.vertex_count())
            return {false, idx, "slide", "move endpoint out of range"};
        if (pos[m.token] != m.from)
            return {false, idx, "token-position", "token is not on the declared source vertex"};
        if (std::find(pos.begin(), pos.end(), m.to) != pos.end())
            return {false, idx, "occupancy", "destination vertex already holds a token"};
        bool edge_ok = inst.variant == Variant::TS ? g.has_undirected_edge(m.from, m.to)
                                                   : g.has_arc(m.from, m.to);
        if (!edge_ok) return {false, idx, "slide", "move does not follow an edge"};
        if (!blue_ok(m.to)) return {false, idx, "blue-only", "move enters a red vertex"};
        pos[m.token] = m.to;
        if (!dominated(pos))
            return {false, idx, "domination", "intermediate configuration does not dominate"};
    }

    if (sorted_copy(pos) != sorted_copy(inst.target))
        return {false, static_cast<int>(seq.moves.size()), "final-configuration",
                "final configuration differs from the target set"};
    return {true, -1, "", ""};
}

int iteration(const LabeledSequence& seq) {
    std::map<std::pair<int, int>, int> entries;
    int best = 1;
    for (size_t t = 0; t < seq.initial.size(); ++t)
        best = std::max(best, ++entries[{static_cast<int>(t), seq.initial[t]}]);
    for (const Move& m : seq.moves)
        best = std::max(best, ++entries[{m.token, m.to}]);
    return best;
}

namespace {

struct BoundedSearch {
    const ReconfigInstance& inst;
    const EngineOptions& opts;
    int iota;
    int n, k;
    Bitset required;
    std::vector<int> target_sorted;
    std::vector<int> pos;
    std::vector<uint8_t> entries; // k x n entry counts
    Bitset occ;
    std::vector<Move> trail;
    std::unordered_set<std::vector<uint64_t>, WordsHash> memo;
    long long explored = 0;
    bool budget_hit = false;

    BoundedSearch(const ReconfigInstance& i, int io, const EngineOptions& o)
        : inst(i), opts(o), iota(io), n(i.graph.vertex_count()),
          k(static_cast<int>(i.start.size())), required(required_mask(i.graph)),
          occ(i.graph.vertex_count()) {
        target_sorted = sorted_copy(i.target);
        pos = sorted_copy(i.start);
        entries.assign(static_cast<size_t>(k) * n, 0);
        for (int t = 0; t < k; ++t) {
            entries[static_cast<size_t>(t) * n + pos[t]] = 1;
            occ.set(pos[t]);
        }
    }

    std::vector<uint64_t> state_key() const {
        std::vector<uint64_t> key;
        key.reserve(k + entries.size() / 8 + 1);
        for (int t = 0; t < k; ++t) key.push_back(static_cast<uint64_t>(pos[t]));
        uint64_t acc = 0;
        int shift = 0;
        for (uint8_t e : entries) {
            acc |= static_cast<uint64_t>(e) << shift;
            shift += 8;
            if (shift == 64) {
                key.push_back(acc);
                acc = 0;
                shift = 0;
            }
        }
        if (shift) key.push_back(acc);
        return key;
    }

    bool at_target() const { return sorted_copy(pos) == target_sorted; }

    bool dfs() {
        if (budget_hit) return false;
        if (at_target()) return true;
        auto key = state_key();
        if (!memo.insert(std::move(key)).second) return false;
        if (++explored > opts.max_configurations) {
            budget_hit = true;
            return false;
        }
        const Graph& g = inst.graph;
        for (int t = 0; t < k && !budget_hit; ++t) {
            int u = pos[t];
            Bitset partial(n);
            for (int j = 0; j < k; ++j)
                if (j != t) partial |= g.closed_mask(pos[j]);
            for (int v : slide_targets(inst, u)) {
                if (occ.test(v)) continue;
                if (g.colored() && !g.is_blue(v)) continue;
                size_t cell = static_cast<size_t>(t) * n + v;
                if (entries[cell] >= iota) continue;
                Bitset cover = partial;
                cover |= g.closed_mask(v);
                if (!cover.contains_all(required)) continue;

                pos[t] = v;
                occ.reset(u);
                occ.set(v);
                ++entries[cell];
                trail.push_back({t, u, v});
                if (dfs()) return true;
                trail.pop_back();
                --entries[cell];
                occ.reset(v);
                occ.set(u);
                pos[t] = u;
            }
        }
        return false;
    }
};

} // namespace

SolveResult reachable_bounded_iteration(const ReconfigInstance& inst, int iota,
                                        const EngineOptions& opts) {
    if (iota < 1) throw std::invalid_argument("iteration bound must be positive");
    auto t0 = Clock::now();
    require_valid(inst);

    BoundedSearch search(inst, iota, opts);
    bool found = search.dfs();
    SolveResult res;
    res.stats.configurations = search.explored;
    res.stats.millis = elapsed_ms(t0);
    if (search.budget_hit) {
        res.outcome = Outcome::BudgetExceeded;
        return res;
    }
    if (found) {
        res.outcome = Outcome::Reachable;
        LabeledSequence seq;
        seq.initial = sorted_copy(inst.start);
        seq.moves = search.trail;
        res.sequence = std::move(seq);
        res.stats.move_count = static_cast<long long>(search.trail.size());
    }
    return res;
}

Matching max_bipartite_matching(int left_size, int right_size,
                                std::span<const std::pair<int, int>> pairs) {
    std::vector<std::vector<int>> adj(left_size);
    for (auto [l, r] : pairs) {
        if (l < 0 || l >= left_size || r < 0 || r >= right_size)
            throw std::out_of_range("matching pair index out of range");
        adj[l].push_back(r);
    }
    std::vector<int> match_right(right_size, -1), match_left(left_size, -1);
    std::vector<char> used;

    auto augment = [&](auto&& self, int l) -> bool {
        for (int r : adj[l]) {
            if (used[r]) continue;
            used[r] = 1;
            if (match_right[r] == -1 || self(self, match_right[r])) {
                match_right[r] = l;
                match_left[l] = r;
                return true;
            }
        }
        return false;
    };

    Matching m;
    for (int l = 0; l < left_size; ++l) {
        used.assign(right_size, 0);
        if (augment(augment, l)) ++m.size;
    }
    m.left_match = std::move(match_left);
    return m;
}

SolveResult solve_depth2(const ReconfigInstance& inst) {
    auto t0 = Clock::now();
    if (inst.variant != Variant::DTS)
        throw VariantError("depth-2 solver handles the DTS variant only");
    if (inst.graph.colored())
        throw VariantError("depth-2 solver handles plain (uncolored) instances only");
    require_valid(inst);
    Layering layers = compute_layers(inst.graph);
    if (layers.depth > 2)
        throw PreconditionError("graph depth exceeds 2");

    const Graph& g = inst.graph;
    std::vector<int> start = sorted_copy(inst.start);
    std::vector<int> target = sorted_copy(inst.target);

    std::vector<int> kept, leaving, entering;
    std::set_intersection(start.begin(), start.end(), target.begin(), target.end(),
                          std::back_inserter(kept));
    std::set_difference(start.begin(), start.end(), target.begin(), target.end(),
                        std::back_inserter(leaving));
    std::set_difference(target.begin(), target.end(), start.begin(), start.end(),
                        std::back_inserter(entering));

    SolveResult res;
    res.stats.move_count = 0;

    Bitset kept_cover(g.vertex_count());
    for (int v : kept) kept_cover |= g.closed_mask(v);
    Bitset in_sets(g.vertex_count());
    for (int v : start) in_sets.set(v);
    for (int v : target) in_sets.set(v);
    bool outside_dominated = true;
    for (int v = 0; v < g.vertex_count() && outside_dominated; ++v)
        if (!in_sets.test(v) && !kept_cover.test(v)) outside_dominated = false;

    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < leaving.size(); ++i)
        for (size_t j = 0; j < entering.size(); ++j)
            if (g.has_arc(leaving[i], entering[j]))
                pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    Matching matching = max_bipartite_matching(static_cast<int>(leaving.size()),
                                               static_cast<int>(entering.size()), pairs);

    if (outside_dominated && matching.size == static_cast<int>(leaving.size())) {
        res.outcome = Outcome::Reachable;
        std::vector<std::pair<int, int>> slides;
        for (size_t i = 0; i < leaving.size(); ++i)
            slides.emplace_back(leaving[i], entering[matching.left_match[i]]);
        res.sequence = label_moves(start, slides);
        res.stats.move_count = static_cast<long long>(slides.size());
    } else {
        res.outcome = Outcome::Unreachable;
    }
    res.stats.configurations = static_cast<long long>(pairs.size());
    res.stats.millis = elapsed_ms(t0);
    return res;
}

} // namespace dsr
