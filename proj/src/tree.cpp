#include "brauer/tree.hpp"

#include "brauer/error.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace brauer {

std::vector<VertexId> PlanarTree::vertex_ids() const {
    std::vector<VertexId> out;
    out.reserve(rotation.size());
    for (const auto& [v, r] : rotation)
        out.push_back(v);
    return out;
}

std::vector<EdgeId> PlanarTree::edge_ids() const {
    std::set<EdgeId> s;
    for (const auto& [v, r] : rotation)
        s.insert(r.begin(), r.end());
    return {s.begin(), s.end()};
}

int PlanarTree::edge_count() const {
    return static_cast<int>(edge_ids().size());
}

int PlanarTree::degree(VertexId v) const {
    auto it = rotation.find(v);
    if (it == rotation.end())
        throw Error("unknown vertex v" + std::to_string(v));
    return static_cast<int>(it->second.size());
}

std::pair<VertexId, VertexId> PlanarTree::endpoints(EdgeId e) const {
    VertexId a = -1, b = -1;
    for (const auto& [v, r] : rotation) {
        if (std::find(r.begin(), r.end(), e) != r.end()) {
            if (a < 0)
                a = v;
            else
                b = v;
        }
    }
    if (b < 0)
        throw Error("unknown edge " + std::to_string(e));
    return {a, b};
}

VertexId PlanarTree::far_end(EdgeId e, VertexId near) const {
    auto [a, b] = endpoints(e);
    if (a == near)
        return b;
    if (b == near)
        return a;
    throw Error("edge " + std::to_string(e) + " not incident to v" + std::to_string(near));
}

EdgeId PlanarTree::rotation_successor(VertexId v, EdgeId e) const {
    const auto& r = rotation.at(v);
    auto it = std::find(r.begin(), r.end(), e);
    if (it == r.end())
        throw Error("edge " + std::to_string(e) + " not incident to v" + std::to_string(v));
    ++it;
    return it == r.end() ? r.front() : *it;
}

EdgeId PlanarTree::max_edge_id() const {
    EdgeId m = 0;
    for (const auto& [v, r] : rotation)
        for (EdgeId e : r)
            m = std::max(m, e);
    return m;
}

void PlanarTree::normalize() {
    for (auto& [v, r] : rotation) {
        if (r.empty())
            continue;
        auto it = std::min_element(r.begin(), r.end());
        std::rotate(r.begin(), it, r.end());
    }
}

void PlanarTree::validate() const {
    if (multiplicity < 1)
        throw Error("bad multiplicity: m = " + std::to_string(multiplicity));
    if ((multiplicity > 1) != exceptional.has_value())
        throw Error("bad multiplicity: exceptional vertex present iff m > 1");
    if (exceptional && !rotation.count(*exceptional))
        throw Error("bad multiplicity: exceptional vertex is not a vertex");
    if (rotation.empty())
        throw Error("empty tree");

    std::map<EdgeId, int> incidence;
    for (const auto& [v, r] : rotation) {
        std::set<EdgeId> seen;
        for (EdgeId e : r) {
            if (e <= 0)
                throw Error("edge ids must be positive, got " + std::to_string(e));
            if (!seen.insert(e).second)
                throw Error("duplicate in rotation at v" + std::to_string(v) +
                            ": edge " + std::to_string(e));
            ++incidence[e];
        }
    }
    for (const auto& [e, count] : incidence)
        if (count != 2)
            throw Error("edge degree != 2: edge " + std::to_string(e) + " appears in " +
                        std::to_string(count) + " rotation lists");

    // connectivity over vertices, then the tree count
    std::set<VertexId> reached;
    std::vector<VertexId> stack{rotation.begin()->first};
    reached.insert(stack.back());
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : rotation.at(v)) {
            VertexId w = far_end(e, v);
            if (reached.insert(w).second)
                stack.push_back(w);
        }
    }
    if (reached.size() != rotation.size())
        throw Error("disconnected: reached " + std::to_string(reached.size()) + " of " +
                    std::to_string(rotation.size()) + " vertices");
    if (incidence.size() != rotation.size() - 1)
        throw Error("cycle present: " + std::to_string(incidence.size()) + " edges on " +
                    std::to_string(rotation.size()) + " vertices");
}

NumericalInvariants numerical_invariants(const PlanarTree& tree) {
    return {tree.edge_count(), tree.multiplicity};
}

// ---------------------------------------------------------------------------
// parsing / serialization

namespace {

struct Line {
    int number;
    std::string text;
};

int column_of(const std::string&, size_t pos) {
    return static_cast<int>(pos) + 1;
}

VertexId parse_vertex_token(const std::string& tok, int line, int col) {
    if (tok.size() < 2 || tok[0] != 'v')
        throw ParseError("expected vertex id of the form v<int>, got '" + tok + "'", line, col);
    for (size_t i = 1; i < tok.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(tok[i])))
            throw ParseError("expected vertex id of the form v<int>, got '" + tok + "'", line, col);
    return std::stoi(tok.substr(1));
}

} // namespace

PlanarTree parse_tree(std::string_view text) {
    PlanarTree tree;
    bool saw_multiplicity = false;
    std::optional<VertexId> exceptional;

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        std::string keyword;
        if (!(ls >> keyword))
            continue;
        if (keyword == "multiplicity") {
            int m;
            if (!(ls >> m))
                throw ParseError("multiplicity needs an integer", lineno, column_of(raw, raw.find(keyword) + keyword.size()));
            if (saw_multiplicity)
                throw ParseError("multiplicity given twice", lineno, 1);
            tree.multiplicity = m;
            saw_multiplicity = true;
        } else if (keyword == "exceptional") {
            std::string tok;
            if (!(ls >> tok))
                throw ParseError("exceptional needs a vertex id", lineno, 1);
            exceptional = parse_vertex_token(tok, lineno, column_of(raw, raw.find(tok)));
        } else if (keyword == "vertex") {
            std::string tok;
            if (!(ls >> tok))
                throw ParseError("vertex needs an id", lineno, 1);
            bool colon_attached = !tok.empty() && tok.back() == ':';
            if (colon_attached)
                tok.pop_back();
            VertexId v = parse_vertex_token(tok, lineno, column_of(raw, raw.find(tok)));
            if (!colon_attached) {
                std::string colon;
                if (!(ls >> colon) || colon != ":")
                    throw ParseError("expected ':' after vertex id", lineno, column_of(raw, raw.find(tok) + tok.size()));
            }
            if (tree.rotation.count(v))
                throw ParseError("vertex v" + std::to_string(v) + " given twice", lineno, 1);
            std::vector<EdgeId> edges;
            std::string etok;
            while (ls >> etok) {
                for (char c : etok)
                    if (!isdigit(static_cast<unsigned char>(c)))
                        throw ParseError("expected edge id (positive integer), got '" + etok + "'",
                                         lineno, column_of(raw, raw.rfind(etok)));
                edges.push_back(std::stoi(etok));
            }
            tree.rotation[v] = std::move(edges);
        } else {
            throw ParseError("unknown directive '" + keyword + "'", lineno, column_of(raw, raw.find(keyword)));
        }
    }

    tree.exceptional = exceptional;
    tree.normalize();
    tree.validate();
    return tree;
}

std::string serialize_tree(const PlanarTree& tree) {
    PlanarTree t = tree;
    t.normalize();
    std::ostringstream out;
    out << "multiplicity " << t.multiplicity << "\n";
    if (t.exceptional)
        out << "exceptional v" << *t.exceptional << "\n";
    for (const auto& [v, r] : t.rotation) {
        out << "vertex v" << v << ":";
        for (EdgeId e : r)
            out << " " << e;
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// canonical codes

namespace {

// Contour word of the subtree entered along e_in; children taken in
// anti-clockwise order after the entering edge. with_labels embeds edge ids.
void encode_subtree(const PlanarTree& t, VertexId w, EdgeId e_in, bool with_labels,
                    std::string& out) {
    out += '(';
    if (with_labels)
        out += std::to_string(e_in);
    if (t.exceptional && *t.exceptional == w)
        out += '!';
    const auto& r = t.rotation.at(w);
    size_t k = std::find(r.begin(), r.end(), e_in) - r.begin();
    for (size_t i = 1; i < r.size(); ++i) {
        EdgeId e = r[(k + i) % r.size()];
        encode_subtree(t, t.far_end(e, w), e, with_labels, out);
    }
    out += ')';
}

std::string encode_from_dart(const PlanarTree& t, VertexId v0, size_t e_index, bool with_labels) {
    std::string out = "m" + std::to_string(t.multiplicity) + "|";
    if (t.exceptional && *t.exceptional == v0)
        out += '!';
    const auto& r = t.rotation.at(v0);
    for (size_t i = 0; i < r.size(); ++i) {
        EdgeId e = r[(e_index + i) % r.size()];
        encode_subtree(t, t.far_end(e, v0), e, with_labels, out);
    }
    return out;
}

std::string min_code(const PlanarTree& t, bool with_labels) {
    std::string best;
    for (const auto& [v, r] : t.rotation) {
        if (r.empty()) {
            // 0-edge tree: single vertex
            std::string code = "m" + std::to_string(t.multiplicity) + "|";
            if (t.exceptional && *t.exceptional == v)
                code += '!';
            if (best.empty() || code < best)
                best = code;
            continue;
        }
        for (size_t i = 0; i < r.size(); ++i) {
            std::string code = encode_from_dart(t, v, i, with_labels);
            if (best.empty() || code < best)
                best = code;
        }
    }
    return best;
}

} // namespace

std::string canonical_code(const PlanarTree& tree) {
    return min_code(tree, false);
}

std::string labeled_code(const PlanarTree& tree) {
    return min_code(tree, true);
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

// ordered rooted tree: children in order
struct Ordered {
    std::vector<Ordered> children;
};

// all ordered trees with n edges
std::vector<Ordered> ordered_trees(int n) {
    static std::map<int, std::vector<Ordered>> memo;
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    std::vector<Ordered> out;
    if (n == 0) {
        out.push_back({});
    } else {
        // split: first child's subtree has k-1 edges, remaining children n-k
        for (int k = 1; k <= n; ++k)
            for (const auto& first : ordered_trees(k - 1))
                for (const auto& rest : ordered_trees(n - k)) {
                    Ordered t;
                    t.children.push_back(first);
                    t.children.insert(t.children.end(), rest.children.begin(), rest.children.end());
                    out.push_back(std::move(t));
                }
    }
    memo[n] = out;
    return out;
}

PlanarTree to_planar(const Ordered& root) {
    PlanarTree t;
    int next_vertex = 0;
    int next_edge = 1;
    std::function<void(const Ordered&, int, EdgeId)> emit = [&](const Ordered& node, int vid,
                                                                EdgeId parent_edge) {
        std::vector<EdgeId> rot;
        if (parent_edge > 0)
            rot.push_back(parent_edge);
        std::vector<std::pair<const Ordered*, EdgeId>> kids;
        for (const auto& c : node.children) {
            EdgeId e = next_edge++;
            rot.push_back(e);
            kids.emplace_back(&c, e);
        }
        t.rotation[vid] = std::move(rot);
        for (auto [c, e] : kids) {
            int w = ++next_vertex;
            emit(*c, w, e);
        }
    };
    emit(root, 0, 0);
    t.normalize();
    return t;
}

} // namespace

std::vector<PlanarTree> enumerate_plane_trees(int n) {
    if (n < 1 || n > 10)
        throw Error("enumerate_plane_trees: bound exceeded (need 1 <= n <= 10, got " +
                    std::to_string(n) + ")");
    std::map<std::string, PlanarTree> reps;
    for (const auto& ot : ordered_trees(n)) {
        PlanarTree t = to_planar(ot);
        std::string code = canonical_code(t);
        reps.try_emplace(std::move(code), std::move(t));
    }
    std::vector<PlanarTree> out;
    out.reserve(reps.size());
    for (auto& [code, t] : reps)
        out.push_back(std::move(t));
    return out;
}

std::string render_dot(const PlanarTree& tree) {
    PlanarTree t = tree;
    t.normalize();
    std::ostringstream out;
    out << "graph brauer_tree {\n";
    out << "  // multiplicity " << t.multiplicity << "\n";
    for (const auto& [v, r] : t.rotation) {
        out << "  // rotation v" << v << ":";
        for (EdgeId e : r)
            out << " " << e;
        out << "\n";
    }
    for (const auto& [v, r] : t.rotation) {
        out << "  v" << v;
        if (t.exceptional && *t.exceptional == v)
            out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (EdgeId e : t.edge_ids()) {
        auto [a, b] = t.endpoints(e);
        out << "  v" << a << " -- v" << b << " [label=\"" << e << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace brauer
