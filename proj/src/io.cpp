#include "dsr/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dsr/engine.hpp"

namespace dsr {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(line_no, std::string("expected an integer for ") + what + ", got '" +
                                      tok + "'");
    }
}

int to_internal(int v, int n, int line_no) {
    if (v < 1 || v > n)
        throw ParseError(line_no, "vertex " + std::to_string(v) + " outside [1," +
                                      std::to_string(n) + "]");
    return v - 1;
}

} // namespace

ReconfigInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    int n = -1, m = -1;
    bool directed = false, colored = false;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> reds, start, target;
    std::optional<int> iota;
    bool saw_s = false, saw_t = false;

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n != -1) throw ParseError(line_no, "duplicate problem line");
            if (toks.size() != 6 || toks[1] != "dsr")
                throw ParseError(line_no, "expected 'p dsr <n> <m> <directed> <colored>'");
            n = parse_int(toks[2], line_no, "n");
            m = parse_int(toks[3], line_no, "m");
            int d = parse_int(toks[4], line_no, "directed flag");
            int c = parse_int(toks[5], line_no, "colored flag");
            if (n < 0 || m < 0 || d < 0 || d > 1 || c < 0 || c > 1)
                throw ParseError(line_no, "malformed problem line");
            directed = d == 1;
            colored = c == 1;
            continue;
        }
        if (n == -1) throw ParseError(line_no, "problem line must come first");
        if (toks[0] == "e") {
            if (toks.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
            int u = to_internal(parse_int(toks[1], line_no, "u"), n, line_no);
            int v = to_internal(parse_int(toks[2], line_no, "v"), n, line_no);
            edges.emplace_back(u, v);
        } else if (toks[0] == "r") {
            if (!colored) throw ParseError(line_no, "red list in an uncolored instance");
            if (toks.size() != 2) throw ParseError(line_no, "expected 'r <v>'");
            reds.push_back(to_internal(parse_int(toks[1], line_no, "v"), n, line_no));
        } else if (toks[0] == "s" || toks[0] == "t") {
            bool is_s = toks[0] == "s";
            if ((is_s && saw_s) || (!is_s && saw_t))
                throw ParseError(line_no, std::string("duplicate '") + toks[0] + "' line");
            (is_s ? saw_s : saw_t) = true;
            auto& dst = is_s ? start : target;
            if (toks.size() < 2) throw ParseError(line_no, "token set must be non-empty");
            for (size_t i = 1; i < toks.size(); ++i) {
                int v = to_internal(parse_int(toks[i], line_no, "token vertex"), n, line_no);
                if (std::find(dst.begin(), dst.end(), v) != dst.end())
                    throw ParseError(line_no, "duplicate vertex in token set");
                dst.push_back(v);
            }
        } else if (toks[0] == "i") {
            if (toks.size() != 2) throw ParseError(line_no, "expected 'i <iota>'");
            int v = parse_int(toks[1], line_no, "iota");
            if (v < 1) throw ParseError(line_no, "iteration bound must be positive");
            iota = v;
        } else {
            throw ParseError(line_no, "unknown line type '" + toks[0] + "'");
        }
    }

    if (n == -1) throw ParseError(line_no, "missing problem line");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(line_no, "edge count " + std::to_string(edges.size()) +
                                      " does not match header m=" + std::to_string(m));
    if (!saw_s || !saw_t) throw ParseError(line_no, "missing 's' or 't' line");
    if (start.size() != target.size()) throw ParseError(line_no, "s/t arity mismatch");

    std::optional<std::vector<Color>> colors;
    if (colored) {
        colors.emplace(n, Color::Blue);
        for (int v : reds) (*colors)[v] = Color::Red;
    }

    ReconfigInstance inst{Graph(n, std::move(edges), directed, std::move(colors)),
                          directed ? Variant::DTS : Variant::TS, std::move(start),
                          std::move(target), iota};
    if (inst.graph.colored())
        for (int v : inst.start)
            if (inst.graph.is_red(v)) throw ParseError(line_no, "red vertex in 's' line");
    if (inst.graph.colored())
        for (int v : inst.target)
            if (inst.graph.is_red(v)) throw ParseError(line_no, "red vertex in 't' line");
    return inst;
}

std::string write_instance(const ReconfigInstance& inst) {
    const Graph& g = inst.graph;
    std::ostringstream out;
    out << "p dsr " << g.vertex_count() << " " << g.edge_count() << " "
        << (g.directed() ? 1 : 0) << " " << (g.colored() ? 1 : 0) << "\n";

    std::vector<std::pair<int, int>> edges = g.edges();
    if (!g.directed())
        for (auto& e : edges)
            if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";

    if (g.colored())
        for (int v : g.red_vertices()) out << "r " << v + 1 << "\n";

    auto emit_set = [&](const char* tag, std::vector<int> s) {
        std::sort(s.begin(), s.end());
        out << tag;
        for (int v : s) out << " " << v + 1;
        out << "\n";
    };
    emit_set("s", inst.start);
    emit_set("t", inst.target);
    if (inst.iteration_bound) out << "i " << *inst.iteration_bound << "\n";
    return out.str();
}

Graph parse_pace_ds(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0, n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (toks.size() != 4 || toks[1] != "ds")
                throw ParseError(line_no, "expected 'p ds <n> <m>'");
            n = parse_int(toks[2], line_no, "n");
            m = parse_int(toks[3], line_no, "m");
        } else if (toks[0] == "e") {
            if (n == -1) throw ParseError(line_no, "problem line must come first");
            if (toks.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
            int u = to_internal(parse_int(toks[1], line_no, "u"), n, line_no);
            int v = to_internal(parse_int(toks[2], line_no, "v"), n, line_no);
            edges.emplace_back(u, v);
        } else {
            throw ParseError(line_no, "unknown line type '" + toks[0] + "'");
        }
    }
    if (n == -1) throw ParseError(line_no, "missing problem line");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(line_no, "edge count does not match header");
    return Graph(n, std::move(edges), false);
}

std::string write_pace_ds(const Graph& g) {
    std::ostringstream out;
    out << "p ds " << g.vertex_count() << " " << g.edge_count() << "\n";
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

std::string to_dot(const ReconfigInstance& inst, const std::map<std::string, int>* anchors) {
    const Graph& g = inst.graph;
    std::map<int, std::string> names;
    if (anchors)
        for (const auto& [name, v] : *anchors) names[v] = name;

    std::set<int> start(inst.start.begin(), inst.start.end());
    std::set<int> target(inst.target.begin(), inst.target.end());

    std::ostringstream out;
    out << (g.directed() ? "digraph" : "graph") << " dsr {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool in_s = start.count(v), in_t = target.count(v);
        const char* shape = in_s && in_t ? "Msquare" : in_s ? "box" : in_t ? "diamond" : "circle";
        out << "  v" << v + 1 << " [shape=" << shape;
        if (names.count(v)) out << " label=\"" << names[v] << "\"";
        if (g.colored() && g.is_red(v)) out << " style=filled fillcolor=lightcoral";
        out << "];\n";
    }
    const char* op = g.directed() ? " -> " : " -- ";
    for (auto [u, v] : g.edges()) out << "  v" << u + 1 << op << "v" << v + 1 << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

json claims_json(const Claims& c) {
    json j = json::object();
    if (c.depth) j["depth"] = *c.depth;
    if (c.pathwidth) j["pathwidth"] = *c.pathwidth;
    if (c.treewidth) j["treewidth"] = *c.treewidth;
    if (c.dfvs) j["dfvs"] = *c.dfvs;
    if (c.property1) j["property1"] = true;
    if (c.property2) j["property2"] = true;
    if (c.dag) j["dag"] = true;
    return j;
}

} // namespace

json sidecar_json(const ReductionOutput& r) {
    json anchors = json::object();
    for (const auto& [name, v] : r.anchors) anchors[name] = v + 1;
    json j{{"gadget", r.builder},
           {"source_n", r.source_n},
           {"source_k", r.source_k},
           {"tokens", r.instance.start.size()},
           {"vertices", r.instance.graph.vertex_count()},
           {"anchors", anchors},
           {"claims", claims_json(r.claims)},
           {"defects", r.defect_flags}};
    if (r.witness) j["witness"] = sequence_json(*r.witness);
    return j;
}

json decomposition_json(const Decomposition& d) {
    json bags = json::array();
    for (const auto& bag : d.bags) {
        json b = json::array();
        for (int v : bag) b.push_back(v + 1);
        bags.push_back(b);
    }
    json j{{"kind", d.kind == DecompKind::Path ? "path" : "tree"}, {"bags", bags}};
    if (d.kind == DecompKind::Tree) {
        json te = json::array();
        for (size_t x = 0; x < d.parent.size(); ++x)
            if (d.parent[x] != -1) te.push_back(json::array({static_cast<int>(x), d.parent[x]}));
        j["tree_edges"] = te;
    }
    if (d.has_property2_annotation()) {
        json p2 = json::object();
        if (d.kind == DecompKind::Path)
            for (const auto& [id, range] : d.property2_ranges)
                p2[id] = json::array({range.first, range.second});
        else
            for (const auto& [id, root] : d.property2_roots) p2[id] = root;
        j["property2"] = p2;
    }
    return j;
}

Decomposition decomposition_from_json(const json& j) {
    Decomposition d;
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "path" && kind != "tree")
        throw std::invalid_argument("decomposition kind must be 'path' or 'tree'");
    d.kind = kind == "path" ? DecompKind::Path : DecompKind::Tree;
    for (const auto& bag : j.at("bags")) {
        std::vector<int> b;
        for (const auto& v : bag) b.push_back(v.get<int>() - 1);
        d.bags.push_back(std::move(b));
    }
    if (d.kind == DecompKind::Tree) {
        d.parent.assign(d.bags.size(), -1);
        if (j.contains("tree_edges"))
            for (const auto& e : j["tree_edges"]) d.parent.at(e.at(0).get<int>()) = e.at(1).get<int>();
    }
    if (j.contains("property2")) {
        for (const auto& [id, val] : j["property2"].items()) {
            if (d.kind == DecompKind::Path)
                d.property2_ranges[id] = {val.at(0).get<int>(), val.at(1).get<int>()};
            else
                d.property2_roots[id] = val.get<int>();
        }
    }
    return d;
}

json sequence_json(const LabeledSequence& seq) {
    json initial = json::array();
    for (int v : seq.initial) initial.push_back(v + 1);
    json moves = json::array();
    for (const Move& m : seq.moves)
        moves.push_back(json::array({m.token, m.from + 1, m.to + 1}));
    return json{{"initial", initial}, {"moves", moves}};
}

LabeledSequence sequence_from_json(const json& j) {
    LabeledSequence seq;
    for (const auto& v : j.at("initial")) seq.initial.push_back(v.get<int>() - 1);
    for (const auto& m : j.at("moves"))
        seq.moves.push_back(
            {m.at(0).get<int>(), m.at(1).get<int>() - 1, m.at(2).get<int>() - 1});
    return seq;
}

namespace {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Reachable: return "reachable";
        case Outcome::Unreachable: return "unreachable";
        default: return "budget-exceeded";
    }
}

} // namespace

json solve_record(const std::string& command, const std::string& instance_name,
                  const ReconfigInstance& inst, const SolveResult& result,
                  const std::vector<std::string>& defects) {
    json j{{"command", command},
           {"instance", instance_name},
           {"variant", variant_name(inst.variant)},
           {"reachable", result.reachable()},
           {"outcome", outcome_name(result.outcome)},
           {"stats", {{"configs", result.stats.configurations}, {"millis", result.stats.millis}}},
           {"defects", defects}};
    if (result.sequence) {
        json moves = json::array();
        for (const Move& m : result.sequence->moves)
            moves.push_back(json::array({m.token, m.from + 1, m.to + 1}));
        j["sequence"] = moves;
        j["iteration"] = iteration(*result.sequence);
    }
    return j;
}

json equivalence_record(const EquivalenceReport& rep) {
    return json{{"command", "equiv"},
                {"instance", rep.reduction},
                {"gadget", rep.reduction},
                {"source_n", rep.source_n},
                {"source_edges", rep.source_edges},
                {"k", rep.k},
                {"tokens", rep.tokens},
                {"vertices", rep.instance_vertices},
                {"ds_answer", rep.ds_answer},
                {"reachable", rep.reconfig_answer},
                {"agree", rep.agree},
                {"stats", {{"configs", rep.configurations}, {"millis", rep.millis}}},
                {"defects", rep.defects},
                {"validity", rep.validity}};
}

} // namespace dsr
