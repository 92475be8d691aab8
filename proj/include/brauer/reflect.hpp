#pragma once

#include "brauer/quiver.hpp"
#include "brauer/tree.hpp"

#include <optional>

namespace brauer {

struct ReflectionResult {
    PlanarTree tree;
    EdgeId new_edge;     // t'
    EdgeId removed_edge; // t
    EdgeId slide_a;      // a_p, the anti-clockwise successor of t at x
    std::optional<EdgeId> slide_b; // b_r; absent in the end-edge case
};

// Slide of the edge t: at each endpoint of degree >= 2, t' attaches beyond the
// anti-clockwise successor of t. The new edge id is max_edge_id() + 1.
ReflectionResult reflect_tree(const PlanarTree& tree, EdgeId t);

struct QuiverReflectionResult {
    QuiverWithRelations quiver;
    int new_vertex;
    int removed_vertex;
};

// Same transformation on the quiver alone: t leaves its cycles, t' splices
// into the far cycle of each slide edge (or forms a fresh 2-cycle with it).
// Relations are regenerated from the transformed cycle structure.
QuiverReflectionResult reflect_quiver(const QuiverWithRelations& q, int t);

} // namespace brauer
