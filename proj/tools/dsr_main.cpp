#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dsr/engine.hpp"
#include "dsr/families.hpp"
#include "dsr/io.hpp"

using namespace dsr;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

long long default_budget() {
    if (const char* env = std::getenv("DSR_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (...) {
            throw std::runtime_error("DSR_BUDGET must be an integer");
        }
    }
    return 10'000'000;
}

std::vector<int> parse_vertex_list(const std::string& spec) {
    std::vector<int> out;
    std::string cleaned = spec;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream ss(cleaned);
    int v;
    while (ss >> v) out.push_back(v - 1);
    return out;
}

int cmd_reduce(const std::string& gadget, int k, bool repair, const std::string& in_path,
               const std::string& out_path, const std::string& sidecar_path,
               const std::string& decomp_path, const std::string& decomp_kind,
               const std::string& witness_from) {
    Graph g = parse_pace_ds(read_file(in_path));
    ReductionOutput r = build_by_id(gadget, g, k, repair);
    if (!witness_from.empty())
        r.witness = build_witness_by_id(gadget, g, k, parse_vertex_list(witness_from));
    write_file(out_path, write_instance(r.instance));
    if (!sidecar_path.empty()) write_file(sidecar_path, sidecar_json(r).dump(2) + "\n");
    if (!decomp_path.empty()) {
        DecompKind kind = decomp_kind == "tree" ? DecompKind::Tree : DecompKind::Path;
        write_file(decomp_path, decomposition_json(build_decomposition(r, kind)).dump(2) + "\n");
    }
    return 0;
}

int cmd_solve(const std::string& engine, std::optional<int> iota, long long budget,
              const std::string& path) {
    ReconfigInstance inst = parse_instance(read_file(path));
    auto validity = check_instance(inst);
    if (!validity.empty()) {
        json j{{"command", "solve"}, {"instance", path}, {"validity", validity}};
        std::cout << j.dump() << "\n";
        return 2;
    }
    EngineOptions opts{budget};
    SolveResult res;
    if (engine == "bfs") {
        res = reachable(inst, opts);
    } else if (engine == "iter-dfs") {
        int bound = iota ? *iota : inst.iteration_bound.value_or(0);
        if (bound < 1) throw CLI::ValidationError("iter-dfs needs --iota or an 'i' line");
        res = reachable_bounded_iteration(inst, bound, opts);
    } else {
        res = solve_depth2(inst);
    }
    std::cout << solve_record("solve", path, inst, res).dump() << "\n";
    if (res.outcome == Outcome::BudgetExceeded) return 2;
    return res.reachable() ? 0 : 1;
}

int cmd_validate(const std::string& path, const std::string& sequence_path) {
    ReconfigInstance inst = parse_instance(read_file(path));
    auto validity = check_instance(inst);
    json j{{"command", "validate"}, {"instance", path}, {"validity", validity},
           {"valid", validity.empty()}};
    bool ok = validity.empty();
    if (!sequence_path.empty()) {
        auto seq = sequence_from_json(json::parse(read_file(sequence_path)));
        auto check = validate_sequence(inst, seq);
        j["sequence_ok"] = check.ok;
        if (!check.ok) {
            j["violation"] = {{"index", check.index}, {"rule", check.rule},
                              {"detail", check.detail}};
            ok = false;
        } else {
            j["iteration"] = iteration(seq);
        }
    }
    std::cout << j.dump() << "\n";
    return ok ? 0 : 1;
}

int cmd_check_decomp(const std::string& graph_path, const std::string& decomp_path,
                     bool property2) {
    ReconfigInstance inst = parse_instance(read_file(graph_path));
    Decomposition d = decomposition_from_json(json::parse(read_file(decomp_path)));
    auto res = validate_decomposition(inst.graph, d);
    json j{{"command", "check-decomp"}, {"instance", graph_path}, {"ok", res.ok},
           {"width", res.width}, {"violations", res.violations}};
    bool ok = res.ok;
    if (property2) {
        bool p2 = check_property2(inst, d);
        j["property2"] = p2;
        ok = ok && p2;
    }
    std::cout << j.dump() << "\n";
    return ok ? 0 : 1;
}

int cmd_equiv(const std::string& gadget, int nmax, int kmax, bool repair, long long budget,
              int max_blue) {
    EquivOptions opts;
    opts.repair = repair;
    opts.engine_cap = budget;
    opts.budget.max_blue = max_blue;
    bool all_agree = true;
    int nmin = gadget == "np-fixed-tw" ? 2 : 1;
    for (int n = nmin; n <= nmax; ++n) {
        for (const Graph& g : connected_undirected_graphs(n)) {
            for (int k = 1; k <= kmax; ++k) {
                EquivalenceReport rep = equivalence_report(gadget, g, k, opts);
                std::cout << equivalence_record(rep).dump() << "\n";
                all_agree = all_agree && rep.agree;
            }
        }
    }
    return all_agree ? 0 : 1;
}

int cmd_export_dot(const std::string& path, const std::string& sidecar_path) {
    ReconfigInstance inst = parse_instance(read_file(path));
    if (!sidecar_path.empty()) {
        json side = json::parse(read_file(sidecar_path));
        std::map<std::string, int> anchors;
        for (const auto& [name, v] : side.at("anchors").items())
            anchors[name] = v.get<int>() - 1;
        std::cout << to_dot(inst, &anchors);
    } else {
        std::cout << to_dot(inst);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dominating-set reconfiguration toolkit"};
    app.require_subcommand(1);

    std::string gadget, in_path, out_path, sidecar_path, decomp_path, witness_from;
    std::string decomp_kind = "path";
    std::string engine = "bfs", instance_path, sequence_path, graph_path;
    int k = 1, nmax = 3, kmax = 1;
    bool repair = false, property2 = false;
    std::optional<int> iota;
    long long budget = 0;

    auto* reduce = app.add_subcommand("reduce", "compile a dominating-set input into a gadget");
    reduce->add_option("--gadget", gadget, "gadget id")
        ->required()
        ->check(CLI::IsMember({"ts-path", "ts-cycle", "dts-path", "dts-cycle", "dag-depth3",
                               "np-fixed-tw", "validator"}));
    reduce->add_option("--k", k, "dominating-set size")->required();
    reduce->add_flag("--repair", repair, "repaired mode for dag-depth3");
    reduce->add_option("--in", in_path, "PACE-style .gr input")->required();
    reduce->add_option("--out", out_path, "instance output")->required();
    reduce->add_option("--sidecar", sidecar_path, "anchor/claims JSON output");
    reduce->add_option("--decomp", decomp_path, "canonical decomposition JSON output");
    reduce->add_option("--decomp-kind", decomp_kind, "path or tree")
        ->check(CLI::IsMember({"path", "tree"}));
    reduce->add_option("--witness-from", witness_from,
                       "dominating set of the source (1-indexed list)");

    auto* solve = app.add_subcommand("solve", "decide reachability");
    solve->add_option("--engine", engine, "bfs, iter-dfs or depth2")
        ->check(CLI::IsMember({"bfs", "iter-dfs", "depth2"}));
    solve->add_option("--iota", iota, "iteration bound for iter-dfs");
    solve->add_option("--budget", budget, "configuration cap");
    solve->add_option("instance", instance_path, "instance file")->required();

    auto* validate = app.add_subcommand("validate", "check instance validity");
    validate->add_option("instance", instance_path, "instance file")->required();
    validate->add_option("--sequence", sequence_path, "sequence JSON to check");

    auto* checkd = app.add_subcommand("check-decomp", "validate a decomposition");
    checkd->add_option("--graph", graph_path, "instance file")->required();
    checkd->add_option("--decomp", decomp_path, "decomposition JSON")->required();
    checkd->add_flag("--property2", property2, "also check the component matching");

    auto* equiv = app.add_subcommand("equiv", "oracle equivalence sweep");
    equiv->add_option("--gadget", gadget, "gadget id")
        ->required()
        ->check(CLI::IsMember({"ts-path", "ts-cycle", "dts-path", "dts-cycle", "dag-depth3",
                               "np-fixed-tw"}));
    equiv->add_option("--nmax", nmax, "largest source size")->required();
    equiv->add_option("--kmax", kmax, "largest k")->required();
    equiv->add_flag("--repair", repair, "repaired mode for dag-depth3");
    equiv->add_option("--budget", budget, "engine configuration cap");
    int max_blue = 128;
    equiv->add_option("--max-blue", max_blue, "token-eligible vertex cap per instance");

    auto* dot = app.add_subcommand("export-dot", "emit DOT");
    dot->add_option("instance", instance_path, "instance file")->required();
    dot->add_option("--sidecar", sidecar_path, "anchor JSON for labels");

    CLI11_PARSE(app, argc, argv);

    try {
        if (budget == 0) budget = default_budget();
        if (reduce->parsed())
            return cmd_reduce(gadget, k, repair || gadget != "dag-depth3", in_path, out_path,
                              sidecar_path, decomp_path, decomp_kind, witness_from);
        if (solve->parsed()) return cmd_solve(engine, iota, budget, instance_path);
        if (validate->parsed()) return cmd_validate(instance_path, sequence_path);
        if (checkd->parsed()) return cmd_check_decomp(graph_path, decomp_path, property2);
        if (equiv->parsed()) return cmd_equiv(gadget, nmax, kmax, repair, budget, max_blue);
        if (dot->parsed()) return cmd_export_dot(instance_path, sidecar_path);
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
