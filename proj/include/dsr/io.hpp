#ifndef DSR_IO_HPP
#define DSR_IO_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "dsr/decomp.hpp"
#include "dsr/gadgets.hpp"
#include "dsr/instance.hpp"
#include "dsr/oracle.hpp"

namespace dsr {

using json = nlohmann::json;

// Instance text format. Vertices are 1-indexed on disk, 0-indexed in memory.
//   c <comment>
//   p dsr <n> <m> <directed 0|1> <colored 0|1>
//   e <u> <v>            (tail then head when directed)
//   r <v>                (red vertices; only when colored)
//   s <v1> ... <vk>
//   t <v1> ... <vk>
//   i <iota>             (optional iteration bound)
ReconfigInstance parse_instance(const std::string& text);

// Canonical form: sorted edges, sorted red list, sorted token sets.
// write(parse(x)) canonicalizes x; canonical files round-trip byte-identically.
std::string write_instance(const ReconfigInstance& inst);

// PACE-style dominating-set input: `p ds <n> <m>` plus `e <u> <v>` lines.
Graph parse_pace_ds(const std::string& text);
std::string write_pace_ds(const Graph& g);

// DOT export; start vertices are boxes, targets diamonds, vertices in both
// box-diamonds (Msquare), red vertices filled. Anchor names become labels.
std::string to_dot(const ReconfigInstance& inst,
                   const std::map<std::string, int>* anchors = nullptr);

json sidecar_json(const ReductionOutput& r);

json decomposition_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);

json sequence_json(const LabeledSequence& seq);
LabeledSequence sequence_from_json(const json& j);

json solve_record(const std::string& command, const std::string& instance_name,
                  const ReconfigInstance& inst, const SolveResult& result,
                  const std::vector<std::string>& defects = {});
json equivalence_record(const EquivalenceReport& rep);

} // namespace dsr

#endif
