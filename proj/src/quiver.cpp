#include "brauer/quiver.hpp"

#include "brauer/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace brauer {

const Arrow& QuiverWithRelations::arrow(int id) const {
    for (const auto& a : arrows)
        if (a.id == id)
            return a;
    throw Error("unknown arrow id " + std::to_string(id));
}

int QuiverWithRelations::path_source(const std::vector<int>& path) const {
    if (path.empty())
        throw Error("empty path");
    return arrow(path.back()).src;
}

int QuiverWithRelations::path_target(const std::vector<int>& path) const {
    if (path.empty())
        throw Error("empty path");
    return arrow(path.front()).dst;
}

void QuiverWithRelations::validate() const {
    cycles_of(*this);
    for (const auto& rel : relations) {
        auto check_path = [&](const std::vector<int>& path) {
            for (size_t i = 0; i + 1 < path.size(); ++i)
                if (arrow(path[i]).src != arrow(path[i + 1]).dst)
                    throw Error("relation path does not compose");
        };
        check_path(rel.left);
        if (rel.kind == Relation::Kind::equality) {
            check_path(rel.right);
            if (path_source(rel.left) != path_source(rel.right) ||
                path_target(rel.left) != path_target(rel.right))
                throw Error("equality relation sides are not parallel");
        }
    }
}

std::vector<Cycle> cycles_of(const QuiverWithRelations& q) {
    std::map<int, std::vector<Arrow>> by_tag;
    for (const auto& a : q.arrows)
        by_tag[a.cycle_tag].push_back(a);

    std::set<int> vertex_set(q.vertices.begin(), q.vertices.end());
    std::map<int, int> cycles_per_vertex;
    std::vector<Cycle> out;
    for (const auto& [tag, arrows] : by_tag) {
        std::map<int, int> next; // src -> dst within the tag
        int start = arrows.front().src;
        for (const auto& a : arrows) {
            if (!vertex_set.count(a.src) || !vertex_set.count(a.dst))
                throw Error("arrow endpoint is not a quiver vertex");
            if (next.count(a.src))
                throw Error("vertex " + std::to_string(a.src) + " has two arrows out in cycle tag " +
                            std::to_string(tag));
            next[a.src] = a.dst;
            start = std::min(start, a.src);
        }
        Cycle c{tag, {}};
        int v = start;
        for (size_t i = 0; i < next.size(); ++i) {
            c.members.push_back(v);
            auto it = next.find(v);
            if (it == next.end())
                throw Error("cycle tag " + std::to_string(tag) + " is not a closed cycle");
            v = it->second;
        }
        if (v != start)
            throw Error("cycle tag " + std::to_string(tag) + " is not a single cycle");
        std::set<int> distinct(c.members.begin(), c.members.end());
        if (distinct.size() != c.members.size())
            throw Error("cycle tag " + std::to_string(tag) + " visits a vertex twice");
        if (c.members.size() < 2)
            throw Error("cycle tag " + std::to_string(tag) + " has fewer than 2 members");
        for (int m : c.members)
            if (++cycles_per_vertex[m] > 2)
                throw Error("vertex " + std::to_string(m) + " lies in more than 2 cycles");
        out.push_back(std::move(c));
    }
    return out;
}

QuiverWithRelations quiver_from_cycles(std::vector<int> vertices, const std::vector<Cycle>& cycles) {
    std::sort(vertices.begin(), vertices.end());
    QuiverWithRelations q;
    q.vertices = vertices;

    // arrows, and per (vertex, cycle) the in/out arrow ids
    struct Slot {
        int tag;
        int out_arrow; // arrow leaving the vertex inside this cycle
        int in_arrow;  // arrow entering it
        const Cycle* cycle;
    };
    std::map<int, std::vector<Slot>> slots; // vertex -> cycles through it

    std::vector<Cycle> sorted = cycles;
    std::sort(sorted.begin(), sorted.end(), [](const Cycle& a, const Cycle& b) { return a.tag < b.tag; });

    int next_arrow = 0;
    for (const auto& c : sorted) {
        size_t k = c.members.size();
        if (k < 2)
            continue;
        std::vector<int> ids(k);
        for (size_t i = 0; i < k; ++i) {
            int src = c.members[i];
            int dst = c.members[(i + 1) % k];
            ids[i] = next_arrow;
            q.arrows.push_back({next_arrow++, src, dst, c.tag});
        }
        for (size_t i = 0; i < k; ++i) {
            int v = c.members[i];
            int out_arrow = ids[i];
            int in_arrow = ids[(i + k - 1) % k];
            slots[v].push_back({c.tag, out_arrow, in_arrow, &c});
        }
    }

    // walk of `len` arrows around the cycle starting at `from`, right-to-left
    auto cycle_walk = [&](const Cycle& c, int from, size_t len) {
        size_t k = c.members.size();
        size_t pos = std::find(c.members.begin(), c.members.end(), from) - c.members.begin();
        // arrow out of members[i] has index ids-in-order; recompute from arrows
        std::vector<int> traversal;
        for (size_t step = 0; step < len; ++step) {
            int src = c.members[(pos + step) % k];
            int dst = c.members[(pos + step + 1) % k];
            for (const auto& a : q.arrows)
                if (a.cycle_tag == c.tag && a.src == src && a.dst == dst) {
                    traversal.push_back(a.id);
                    break;
                }
        }
        std::reverse(traversal.begin(), traversal.end());
        return traversal;
    };

    for (int v : q.vertices) {
        auto it = slots.find(v);
        if (it == slots.end())
            continue;
        const auto& ss = it->second;
        if (ss.size() == 2) {
            // mixed compositions vanish, both orders
            for (int i : {0, 1}) {
                const Slot& u = ss[i];
                const Slot& w = ss[1 - i];
                q.relations.push_back({Relation::Kind::zero, {w.out_arrow, u.in_arrow}, {}});
            }
            // the two full cycles at v agree
            q.relations.push_back({Relation::Kind::equality,
                                   cycle_walk(*ss[0].cycle, v, ss[0].cycle->members.size()),
                                   cycle_walk(*ss[1].cycle, v, ss[1].cycle->members.size())});
        } else if (ss.size() == 1) {
            // full cycle followed by one more arrow vanishes
            q.relations.push_back({Relation::Kind::zero,
                                   cycle_walk(*ss[0].cycle, v, ss[0].cycle->members.size() + 1),
                                   {}});
        }
    }
    return q;
}

QuiverWithRelations quiver_of(const PlanarTree& tree) {
    tree.validate();
    if (tree.multiplicity != 1)
        throw Error("quiver_of: multiplicity > 1 unsupported");
    if (tree.edge_count() < 2)
        throw Error("quiver_of: need at least 2 edges");
    std::vector<Cycle> cycles;
    for (const auto& [v, r] : tree.rotation)
        if (r.size() >= 2)
            cycles.push_back({v, r});
    return quiver_from_cycles(tree.edge_ids(), cycles);
}

QuiverWithRelations brauer_line_presentation(int n) {
    if (n < 2)
        throw Error("brauer_line_presentation: need n >= 2");
    std::vector<int> vertices(n);
    std::vector<Cycle> cycles;
    for (int i = 1; i <= n; ++i)
        vertices[i - 1] = i;
    for (int i = 1; i < n; ++i)
        cycles.push_back({i, {i, i + 1}});
    return quiver_from_cycles(vertices, cycles);
}

int IntMatrix::at(int row_label, int col_label) const {
    auto row = std::find(labels.begin(), labels.end(), row_label);
    auto col = std::find(labels.begin(), labels.end(), col_label);
    if (row == labels.end() || col == labels.end())
        throw Error("IntMatrix: unknown label");
    return entries[row - labels.begin()][col - labels.begin()];
}

IntMatrix cartan_matrix(const PlanarTree& tree) {
    tree.validate();
    if (tree.multiplicity != 1)
        throw Error("cartan_matrix: multiplicity > 1 unsupported");
    std::vector<EdgeId> edges = tree.edge_ids();
    IntMatrix m;
    m.labels = edges;
    int n = static_cast<int>(edges.size());
    m.entries.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        auto [a, b] = tree.endpoints(edges[i]);
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                m.entries[i][j] = 2;
                continue;
            }
            auto [c, d] = tree.endpoints(edges[j]);
            bool shared = a == c || a == d || b == c || b == d;
            m.entries[i][j] = shared ? 1 : 0;
        }
    }
    return m;
}

namespace {

using PairPath = std::vector<std::pair<int, int>>;

PairPath as_pairs(const QuiverWithRelations& q, const std::vector<int>& path) {
    PairPath out;
    for (int id : path) {
        const Arrow& a = q.arrow(id);
        out.emplace_back(a.src, a.dst);
    }
    return out;
}

// (kind, smaller side, larger side) so left/right order is immaterial
using NormRelation = std::tuple<int, PairPath, PairPath>;

std::set<NormRelation> normalized_relations(const QuiverWithRelations& q,
                                            const std::map<int, int>& vertex_map) {
    auto mapped = [&](PairPath p) {
        for (auto& [s, d] : p) {
            if (auto it = vertex_map.find(s); it != vertex_map.end())
                s = it->second;
            if (auto it = vertex_map.find(d); it != vertex_map.end())
                d = it->second;
        }
        return p;
    };
    std::set<NormRelation> out;
    for (const auto& rel : q.relations) {
        PairPath l = mapped(as_pairs(q, rel.left));
        if (rel.kind == Relation::Kind::zero) {
            out.insert({0, l, {}});
        } else {
            PairPath r = mapped(as_pairs(q, rel.right));
            if (r < l)
                std::swap(l, r);
            out.insert({1, l, r});
        }
    }
    return out;
}

} // namespace

bool quiver_isomorphic(const QuiverWithRelations& a, const QuiverWithRelations& b,
                       const std::map<int, int>& vertex_map) {
    auto map_vertex = [&](int v) {
        auto it = vertex_map.find(v);
        return it == vertex_map.end() ? v : it->second;
    };

    std::set<int> av, bv;
    for (int v : a.vertices)
        av.insert(map_vertex(v));
    bv.insert(b.vertices.begin(), b.vertices.end());
    if (av != bv)
        return false;

    // arrows must be uniquely determined by (src, dst) on both sides
    std::map<std::pair<int, int>, int> a_tag, b_tag;
    for (const auto& ar : a.arrows)
        if (!a_tag.emplace(std::make_pair(map_vertex(ar.src), map_vertex(ar.dst)), ar.cycle_tag).second)
            return false;
    for (const auto& br : b.arrows)
        if (!b_tag.emplace(std::make_pair(br.src, br.dst), br.cycle_tag).second)
            return false;
    if (a_tag.size() != b_tag.size())
        return false;

    std::map<int, int> tag_map, tag_map_rev;
    for (const auto& [key, ta] : a_tag) {
        auto it = b_tag.find(key);
        if (it == b_tag.end())
            return false;
        int tb = it->second;
        auto [f, inserted] = tag_map.emplace(ta, tb);
        if (!inserted && f->second != tb)
            return false;
        auto [g, inserted2] = tag_map_rev.emplace(tb, ta);
        if (!inserted2 && g->second != ta)
            return false;
    }

    std::map<int, int> identity_b;
    return normalized_relations(a, vertex_map) == normalized_relations(b, identity_b);
}

std::string quiver_to_dot(const QuiverWithRelations& q) {
    static const char* palette[] = {"black",   "red",    "blue",   "darkgreen", "orange",
                                    "purple",  "brown",  "cyan4",  "magenta",   "gray40"};
    std::map<int, int> tag_index;
    for (const auto& a : q.arrows)
        tag_index.emplace(a.cycle_tag, static_cast<int>(tag_index.size()));
    std::ostringstream out;
    out << "digraph brauer_quiver {\n";
    for (int v : q.vertices)
        out << "  q" << v << " [label=\"" << v << "\"];\n";
    for (const auto& a : q.arrows)
        out << "  q" << a.src << " -> q" << a.dst << " [color=" << palette[tag_index[a.cycle_tag] % 10]
            << " label=\"" << a.cycle_tag << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace brauer
