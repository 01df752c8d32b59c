#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dsr/decomp.hpp"
#include "dsr/engine.hpp"
#include "dsr/families.hpp"
#include "dsr/gadgets.hpp"
#include "dsr/io.hpp"
#include "dsr/oracle.hpp"

namespace py = pybind11;
using namespace dsr;

namespace {

py::dict claims_dict(const Claims& c) {
    py::dict d;
    if (c.depth) d["depth"] = *c.depth;
    if (c.pathwidth) d["pathwidth"] = *c.pathwidth;
    if (c.treewidth) d["treewidth"] = *c.treewidth;
    if (c.dfvs) d["dfvs"] = *c.dfvs;
    d["property1"] = c.property1;
    d["property2"] = c.property2;
    d["dag"] = c.dag;
    return d;
}

} // namespace

PYBIND11_MODULE(_dsr, m) {
    m.doc() = "dominating-set reconfiguration toolkit";

    py::register_exception<VariantError>(m, "VariantError");
    py::register_exception<NotADagError>(m, "NotADagError");
    py::register_exception<PreconditionError>(m, "PreconditionError");
    py::register_exception<BudgetError>(m, "BudgetError");
    py::register_exception<ParseError>(m, "ParseFailure");

    py::enum_<Color>(m, "Color").value("Blue", Color::Blue).value("Red", Color::Red);
    py::enum_<Variant>(m, "Variant").value("TS", Variant::TS).value("DTS", Variant::DTS);
    py::enum_<Outcome>(m, "Outcome")
        .value("Reachable", Outcome::Reachable)
        .value("Unreachable", Outcome::Unreachable)
        .value("BudgetExceeded", Outcome::BudgetExceeded);
    py::enum_<DecompKind>(m, "DecompKind")
        .value("Path", DecompKind::Path)
        .value("Tree", DecompKind::Tree);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<int, int>>, bool,
                      std::optional<std::vector<Color>>>(),
             py::arg("n"), py::arg("edges"), py::arg("directed") = false,
             py::arg("colors") = std::nullopt)
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("directed", &Graph::directed)
        .def_property_readonly("colored", &Graph::colored)
        .def("edges", &Graph::edges)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
        .def("closed_neighborhood", &Graph::closed_neighborhood)
        .def("blue_vertices", &Graph::blue_vertices)
        .def("red_vertices", &Graph::red_vertices);

    m.def("compute_layers", [](const Graph& g) {
        Layering lay = compute_layers(g);
        return py::make_tuple(lay.layer, lay.depth);
    });
    m.def("is_dominating",
          [](const Graph& g, std::vector<int> s) { return is_dominating(g, s); });
    m.def("is_redblue_dominating",
          [](const Graph& g, std::vector<int> s) { return is_redblue_dominating(g, s); });
    m.def("blue_components", &blue_components);
    m.def("verify_dfvs",
          [](const Graph& g, std::vector<int> fvs) { return verify_dfvs(g, fvs); });

    py::class_<ReconfigInstance>(m, "Instance")
        .def(py::init([](Graph g, Variant variant, std::vector<int> start,
                         std::vector<int> target, std::optional<int> iota) {
                 return ReconfigInstance{std::move(g), variant, std::move(start),
                                         std::move(target), iota};
             }),
             py::arg("graph"), py::arg("variant"), py::arg("start"), py::arg("target"),
             py::arg("iteration_bound") = std::nullopt)
        .def_readonly("graph", &ReconfigInstance::graph)
        .def_readonly("variant", &ReconfigInstance::variant)
        .def_readonly("start", &ReconfigInstance::start)
        .def_readonly("target", &ReconfigInstance::target)
        .def_readonly("iteration_bound", &ReconfigInstance::iteration_bound);
    m.def("check_instance", &check_instance);

    py::class_<Move>(m, "Move")
        .def(py::init<int, int, int>())
        .def_readonly("token", &Move::token)
        .def_readonly("from_vertex", &Move::from)
        .def_readonly("to_vertex", &Move::to);

    py::class_<LabeledSequence>(m, "Sequence")
        .def(py::init([](std::vector<int> initial, std::vector<std::tuple<int, int, int>> mv) {
                 LabeledSequence s;
                 s.initial = std::move(initial);
                 for (auto [t, f, to] : mv) s.moves.push_back({t, f, to});
                 return s;
             }),
             py::arg("initial"), py::arg("moves"))
        .def_readonly("initial", &LabeledSequence::initial)
        .def_readonly("moves", &LabeledSequence::moves);

    py::class_<SolveStats>(m, "SolveStats")
        .def_readonly("configurations", &SolveStats::configurations)
        .def_readonly("move_count", &SolveStats::move_count)
        .def_readonly("millis", &SolveStats::millis);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("outcome", &SolveResult::outcome)
        .def_readonly("sequence", &SolveResult::sequence)
        .def_readonly("stats", &SolveResult::stats)
        .def_property_readonly("reachable", &SolveResult::reachable);

    m.def("legal_moves", [](const ReconfigInstance& inst, std::vector<int> config) {
        return legal_moves(inst, config);
    });
    m.def(
        "reachable",
        [](const ReconfigInstance& inst, long long budget) {
            return reachable(inst, EngineOptions{budget});
        },
        py::arg("instance"), py::arg("budget") = 10'000'000);
    m.def("validate_sequence", [](const ReconfigInstance& inst, const LabeledSequence& seq) {
        auto check = validate_sequence(inst, seq);
        py::dict d;
        d["ok"] = check.ok;
        d["index"] = check.index;
        d["rule"] = check.rule;
        d["detail"] = check.detail;
        return d;
    });
    m.def("iteration", &iteration);
    m.def(
        "reachable_bounded_iteration",
        [](const ReconfigInstance& inst, int iota, long long budget) {
            return reachable_bounded_iteration(inst, iota, EngineOptions{budget});
        },
        py::arg("instance"), py::arg("iota"), py::arg("budget") = 10'000'000);
    m.def("solve_depth2", &solve_depth2);
    m.def("max_bipartite_matching",
          [](int l, int r, std::vector<std::pair<int, int>> pairs) {
              Matching match = max_bipartite_matching(l, r, pairs);
              return py::make_tuple(match.size, match.left_match);
          });

    m.def("has_dominating_set", &has_dominating_set);
    m.def("min_dominating_set", [](const Graph& g) {
        auto res = min_dominating_set(g);
        return py::make_tuple(res.size, res.witness);
    });
    m.def(
        "equivalence_report",
        [](const std::string& id, const Graph& g, int k, bool repair, int max_blue) {
            EquivOptions opts;
            opts.repair = repair;
            opts.budget.max_blue = max_blue;
            EquivalenceReport rep = equivalence_report(id, g, k, opts);
            py::dict d;
            d["reduction"] = rep.reduction;
            d["k"] = rep.k;
            d["tokens"] = rep.tokens;
            d["vertices"] = rep.instance_vertices;
            d["ds_answer"] = rep.ds_answer;
            d["reconfig_answer"] = rep.reconfig_answer;
            d["agree"] = rep.agree;
            d["configurations"] = rep.configurations;
            d["defects"] = rep.defects;
            d["validity"] = rep.validity;
            return d;
        },
        py::arg("reduction_id"), py::arg("graph"), py::arg("k"), py::arg("repair") = true,
        py::arg("max_blue") = 32);

    py::class_<ReductionOutput>(m, "ReductionOutput")
        .def_readonly("instance", &ReductionOutput::instance)
        .def_readonly("anchors", &ReductionOutput::anchors)
        .def_readonly("defect_flags", &ReductionOutput::defect_flags)
        .def_readonly("builder", &ReductionOutput::builder)
        .def_readonly("witness", &ReductionOutput::witness)
        .def_property_readonly("claims",
                               [](const ReductionOutput& r) { return claims_dict(r.claims); });

    m.def(
        "build",
        [](const std::string& id, const Graph& g, int k, bool repair) {
            return build_by_id(id, g, k, repair);
        },
        py::arg("gadget"), py::arg("graph"), py::arg("k"), py::arg("repair") = true);
    m.def("build_clock_battery", &build_clock_battery);
    m.def(
        "build_witness",
        [](const std::string& id, const Graph& g, int k, std::vector<int> ds) {
            return build_witness_by_id(id, g, k, ds);
        },
        py::arg("gadget"), py::arg("graph"), py::arg("k"), py::arg("dominating_set"));
    m.def("validator_selection_dominates",
          [](const Graph& g, int k, std::vector<int> rows, int j) {
              return validator_selection_dominates(g, k, rows, j);
          });
    m.def("lift_redblue_undirected", &lift_redblue_undirected);
    m.def("lift_redblue_directed", &lift_redblue_directed);
    m.def("lift_redblue_directed_tw_preserving", &lift_redblue_directed_tw_preserving);

    py::class_<Decomposition>(m, "Decomposition")
        .def_readonly("kind", &Decomposition::kind)
        .def_readonly("bags", &Decomposition::bags)
        .def_readonly("parent", &Decomposition::parent)
        .def_property_readonly("width", &Decomposition::width);

    m.def("validate_decomposition", [](const Graph& g, const Decomposition& d) {
        auto res = validate_decomposition(g, d);
        py::dict out;
        out["ok"] = res.ok;
        out["width"] = res.width;
        out["violations"] = res.violations;
        return out;
    });
    m.def("check_property1", &check_property1);
    m.def("check_property2", &check_property2);
    m.def("build_decomposition", &build_decomposition);
    m.def("lift_decomposition", &lift_decomposition);

    m.def("parse_instance", &parse_instance);
    m.def("write_instance", &write_instance);
    m.def("parse_pace_ds", &parse_pace_ds);
    m.def("write_pace_ds", &write_pace_ds);
    m.def(
        "to_dot",
        [](const ReconfigInstance& inst, std::optional<std::map<std::string, int>> anchors) {
            return anchors ? to_dot(inst, &*anchors) : to_dot(inst);
        },
        py::arg("instance"), py::arg("anchors") = std::nullopt);
    m.def("sidecar_json", [](const ReductionOutput& r) { return sidecar_json(r).dump(); });
    m.def("decomposition_json",
          [](const Decomposition& d) { return decomposition_json(d).dump(); });
}
