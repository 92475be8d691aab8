#include "brauer/reflect.hpp"

#include "brauer/error.hpp"

#include <algorithm>
#include <set>

namespace brauer {

namespace {

void insert_after(std::vector<int>& list, int anchor, int value) {
    auto it = std::find(list.begin(), list.end(), anchor);
    if (it == list.end())
        throw Error("internal: anchor not found");
    list.insert(it + 1, value);
}

void remove_value(std::vector<int>& list, int value) {
    auto it = std::find(list.begin(), list.end(), value);
    if (it == list.end())
        throw Error("internal: value not found");
    list.erase(it);
}

} // namespace

ReflectionResult reflect_tree(const PlanarTree& tree, EdgeId t) {
    tree.validate();
    if (tree.multiplicity != 1)
        throw Error("reflect_tree: multiplicity > 1 unsupported");
    if (tree.edge_count() < 2)
        throw Error("reflect_tree: need at least 2 edges");
    auto edges = tree.edge_ids();
    if (std::find(edges.begin(), edges.end(), t) == edges.end())
        throw Error("reflect_tree: unknown edge " + std::to_string(t));

    auto [u, v] = tree.endpoints(t);
    EdgeId t_new = tree.max_edge_id() + 1;
    PlanarTree out = tree;

    if (tree.degree(u) == 1 || tree.degree(v) == 1) {
        VertexId y = tree.degree(v) == 1 ? v : u;
        VertexId x = tree.far_end(t, y);
        EdgeId a_p = tree.rotation_successor(x, t);
        VertexId z = tree.far_end(a_p, x);
        remove_value(out.rotation[x], t);
        out.rotation[y] = {t_new};
        insert_after(out.rotation[z], a_p, t_new);
        out.normalize();
        out.validate();
        return {out, t_new, t, a_p, std::nullopt};
    }

    VertexId x = std::min(u, v), y = std::max(u, v);
    EdgeId a_p = tree.rotation_successor(x, t);
    VertexId z = tree.far_end(a_p, x);
    EdgeId b_r = tree.rotation_successor(y, t);
    VertexId w = tree.far_end(b_r, y);
    remove_value(out.rotation[x], t);
    remove_value(out.rotation[y], t);
    insert_after(out.rotation[z], a_p, t_new);
    insert_after(out.rotation[w], b_r, t_new);
    out.normalize();
    out.validate();
    return {out, t_new, t, a_p, b_r};
}

namespace {

// The cycle structure corresponds to a Brauer tree iff the counts match a
// tree (cycles plus free edge-slots = edges + 1) and the incidence between
// cycles is connected.
void check_tree_shaped(const QuiverWithRelations& q, const std::vector<Cycle>& cycles) {
    std::map<int, int> cycle_count;
    for (int v : q.vertices)
        cycle_count[v] = 0;
    for (const auto& c : cycles)
        for (int m : c.members)
            ++cycle_count[m];
    int free_slots = 0;
    for (const auto& [v, cnt] : cycle_count) {
        if (cnt == 0)
            throw Error("not Brauer-tree shaped: vertex " + std::to_string(v) + " lies in no cycle");
        free_slots += 2 - cnt;
    }
    int n = static_cast<int>(q.vertices.size());
    if (static_cast<int>(cycles.size()) + free_slots != n + 1)
        throw Error("not Brauer-tree shaped: cycle structure has wrong tree count");
    if (cycles.empty())
        throw Error("not Brauer-tree shaped: no cycles");
    // connectivity of cycles through shared vertices
    std::map<int, std::vector<size_t>> vertex_cycles;
    for (size_t i = 0; i < cycles.size(); ++i)
        for (int m : cycles[i].members)
            vertex_cycles[m].push_back(i);
    std::set<size_t> seen{0};
    std::vector<size_t> stack{0};
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        for (int m : cycles[i].members)
            for (size_t j : vertex_cycles[m])
                if (seen.insert(j).second)
                    stack.push_back(j);
    }
    if (seen.size() != cycles.size())
        throw Error("not Brauer-tree shaped: cycle structure is disconnected");
}

} // namespace

QuiverReflectionResult reflect_quiver(const QuiverWithRelations& q, int t) {
    std::vector<Cycle> cycles = cycles_of(q);
    check_tree_shaped(q, cycles);
    if (std::find(q.vertices.begin(), q.vertices.end(), t) == q.vertices.end())
        throw Error("reflect_quiver: unknown vertex " + std::to_string(t));

    int t_new = *std::max_element(q.vertices.begin(), q.vertices.end()) + 1;
    int fresh_tag = 0;
    for (const auto& c : cycles)
        fresh_tag = std::max(fresh_tag, c.tag + 1);

    // pending splice of t' after a slide vertex, keyed by cycle index
    std::map<size_t, int> splice_after;
    std::vector<Cycle> created;

    for (size_t i = 0; i < cycles.size(); ++i) {
        auto& members = cycles[i].members;
        auto it = std::find(members.begin(), members.end(), t);
        if (it == members.end())
            continue;
        size_t idx = it - members.begin();
        int slide = members[(idx + 1) % members.size()];
        members.erase(members.begin() + idx);

        // far cycle of the slide vertex, if any
        size_t far = cycles.size();
        for (size_t j = 0; j < cycles.size(); ++j) {
            if (j == i)
                continue;
            if (std::find(cycles[j].members.begin(), cycles[j].members.end(), slide) !=
                cycles[j].members.end()) {
                far = j;
                break;
            }
        }
        if (far < cycles.size()) {
            if (splice_after.count(far))
                throw Error("not Brauer-tree shaped: two slides into one cycle");
            splice_after[far] = slide;
        } else {
            created.push_back({fresh_tag++, {slide, t_new}});
        }
    }
    if (splice_after.empty() && created.empty())
        throw Error("reflect_quiver: vertex " + std::to_string(t) + " lies in no cycle");

    std::vector<Cycle> out_cycles;
    for (size_t i = 0; i < cycles.size(); ++i) {
        Cycle c = cycles[i];
        if (auto it = splice_after.find(i); it != splice_after.end())
            insert_after(c.members, it->second, t_new);
        if (c.members.size() >= 2)
            out_cycles.push_back(std::move(c));
    }
    out_cycles.insert(out_cycles.end(), created.begin(), created.end());

    std::vector<int> vertices;
    for (int v : q.vertices)
        if (v != t)
            vertices.push_back(v);
    vertices.push_back(t_new);

    return {quiver_from_cycles(std::move(vertices), out_cycles), t_new, t};
}

} // namespace brauer
