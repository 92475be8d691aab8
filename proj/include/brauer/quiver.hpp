#pragma once

#include "brauer/tree.hpp"

#include <map>
#include <string>
#include <vector>

namespace brauer {

struct Arrow {
    int id;
    int src;
    int dst;
    // the tree vertex whose cycle the arrow belongs to
    int cycle_tag;
    bool operator==(const Arrow&) const = default;
};

// Paths are stored right-to-left: left[0] is the arrow applied last, matching
// the written composite a_{n-1}...a_1.
struct Relation {
    enum class Kind { zero, equality };
    Kind kind;
    std::vector<int> left;
    std::vector<int> right; // equality only
    bool operator==(const Relation&) const = default;
};

struct QuiverWithRelations {
    std::vector<int> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;

    const Arrow& arrow(int id) const;
    int path_source(const std::vector<int>& path) const;
    int path_target(const std::vector<int>& path) const;
    void validate() const;
};

// One cycle per tree vertex of degree >= 2; members in arrow order.
struct Cycle {
    int tag;
    std::vector<int> members;
};

// Reconstructs the per-tag cycles and checks the Brauer-shape invariants
// (single cycle per tag, distinct members, <= 2 tags per vertex).
std::vector<Cycle> cycles_of(const QuiverWithRelations& q);

// Arrows e -> successor within each cycle, plus the standard Brauer relations
// (mixed zero, two-cycle equality, end cycle-plus-one zero).
QuiverWithRelations quiver_from_cycles(std::vector<int> vertices, const std::vector<Cycle>& cycles);

QuiverWithRelations quiver_of(const PlanarTree& tree);

QuiverWithRelations brauer_line_presentation(int n);

struct IntMatrix {
    std::vector<int> labels;
    std::vector<std::vector<int>> entries;

    int at(int row_label, int col_label) const;
    bool operator==(const IntMatrix&) const = default;
};

IntMatrix cartan_matrix(const PlanarTree& tree);

// Labeled comparison: vertex_map sends a-vertices to b-vertices; arrows are
// matched by (src, dst), cycle tags up to bijection, relations as sets.
bool quiver_isomorphic(const QuiverWithRelations& a, const QuiverWithRelations& b,
                       const std::map<int, int>& vertex_map);

std::string quiver_to_dot(const QuiverWithRelations& q);

} // namespace brauer
