#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brauer {

using VertexId = int;
using EdgeId = int;

struct NumericalInvariants {
    int edge_count;
    int multiplicity;
    bool operator==(const NumericalInvariants&) const = default;
};

// A Brauer tree: finite tree with an anti-clockwise cyclic order of the
// incident edges at each vertex, a multiplicity m, and (iff m > 1) an
// exceptional vertex. Values are immutable after construction; every
// operation returns a fresh tree.
struct PlanarTree {
    // vertex -> incident edges, anti-clockwise; the list is stored rotated so
    // that it starts at its minimal edge id (see normalize()).
    std::map<VertexId, std::vector<EdgeId>> rotation;
    int multiplicity = 1;
    std::optional<VertexId> exceptional;

    std::vector<VertexId> vertex_ids() const;
    std::vector<EdgeId> edge_ids() const;
    int edge_count() const;
    int degree(VertexId v) const;
    // both endpoints of an edge, smaller vertex first
    std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
    VertexId far_end(EdgeId e, VertexId near) const;
    // next incident edge anti-clockwise after e at v
    EdgeId rotation_successor(VertexId v, EdgeId e) const;
    EdgeId max_edge_id() const;

    void normalize();
    // throws Error naming the violated invariant
    void validate() const;

    bool operator==(const PlanarTree&) const = default;
};

PlanarTree parse_tree(std::string_view text);
std::string serialize_tree(const PlanarTree& tree);

NumericalInvariants numerical_invariants(const PlanarTree& tree);

// Invariant of the plane-isomorphism class (orientation-preserving
// relabeling of vertices and edges). Printable ASCII.
std::string canonical_code(const PlanarTree& tree);

// Invariant under vertex relabeling only; edge labels are part of the code.
std::string labeled_code(const PlanarTree& tree);

// One representative per plane-isomorphism class of n-edge trees, m = 1,
// sorted by canonical code. 1 <= n <= 10.
std::vector<PlanarTree> enumerate_plane_trees(int n);

std::string render_dot(const PlanarTree& tree);

} // namespace brauer
