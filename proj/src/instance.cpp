#include "dsr/instance.hpp"

#include <algorithm>
#include <set>

namespace dsr {

std::vector<std::string> check_instance(const ReconfigInstance& inst) {
    std::vector<std::string> errs;
    const Graph& g = inst.graph;

    if (inst.variant == Variant::DTS && !g.directed())
        errs.push_back("variant: DTS requires a directed graph");
    if (inst.variant == Variant::TS && g.directed())
        errs.push_back("variant: TS requires an undirected graph");

    if (inst.start.empty()) errs.push_back("arity: start set is empty");
    if (inst.start.size() != inst.target.size())
        errs.push_back("arity: start and target sizes differ");
    if (inst.iteration_bound && *inst.iteration_bound < 1)
        errs.push_back("iteration bound must be positive");

    auto check_set = [&](const std::vector<int>& s, const char* name) {
        std::set<int> seen;
        for (int v : s) {
            if (v < 0 || v >= g.vertex_count()) {
                errs.push_back(std::string(name) + ": vertex out of range");
                return false;
            }
            if (!seen.insert(v).second) {
                errs.push_back(std::string(name) + ": duplicate vertex");
                return false;
            }
            if (g.colored() && g.is_red(v)) {
                errs.push_back(std::string(name) + ": token on a red vertex");
                return false;
            }
        }
        return true;
    };
    bool s_ok = check_set(inst.start, "start");
    bool t_ok = check_set(inst.target, "target");

    auto dominates = [&](const std::vector<int>& s) {
        return g.colored() ? is_redblue_dominating(g, s) : is_dominating(g, s);
    };
    if (s_ok && !inst.start.empty() && !dominates(inst.start))
        errs.push_back("start set is not dominating");
    if (t_ok && !inst.target.empty() && !dominates(inst.target))
        errs.push_back("target set is not dominating");

    return errs;
}

} // namespace dsr
