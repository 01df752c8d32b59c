#ifndef DSR_DECOMP_HPP
#define DSR_DECOMP_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dsr/gadgets.hpp"
#include "dsr/instance.hpp"

namespace dsr {

enum class DecompKind { Path, Tree };

// Bag-based path/tree decomposition. Width is max bag size minus one. The
// optional annotation matches blue components to disjoint bag ranges (path)
// or to nodes whose descendant subtree hosts the component (tree).
struct Decomposition {
    DecompKind kind = DecompKind::Path;
    std::vector<std::vector<int>> bags;
    std::vector<int> parent; // tree kind: parent per node, -1 at the root
    std::map<std::string, std::pair<int, int>> property2_ranges;
    std::map<std::string, int> property2_roots;

    bool has_property2_annotation() const {
        return kind == DecompKind::Path ? !property2_ranges.empty() : !property2_roots.empty();
    }
    int width() const;
};

struct DecompCheck {
    bool ok = false;
    int width = -1;
    std::vector<std::string> violations;
};

// Checks vertex coverage, edge coverage (arcs taken as undirected pairs)
// and per-vertex connectivity; reports every violated axiom with a witness.
DecompCheck validate_decomposition(const Graph& g, const Decomposition& d);

// Every blue component contains exactly one start and one target vertex.
bool check_property1(const ReconfigInstance& inst);

// The annotated ranges/subtrees are disjoint, bijective with the blue
// components, and each covers its component. The checker validates a given
// annotation; it does not search for one.
bool check_property2(const ReconfigInstance& inst, const Decomposition& d);

// Canonical decomposition recipe for a builder output, at the width the
// builder claims. Throws for builders without a recipe.
Decomposition build_decomposition(const ReductionOutput& r, DecompKind kind);

// Rebuilds a canonical decomposition for a lifted output from the original
// output's decomposition.
Decomposition lift_decomposition(const Decomposition& d, const ReductionOutput& original,
                                 const ReductionOutput& lifted);

} // namespace dsr

#endif
