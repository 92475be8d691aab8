#include "brauer/plan.hpp"

#include "brauer/error.hpp"
#include "brauer/reflect.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace brauer {

bool is_line(const PlanarTree& tree) {
    tree.validate();
    for (const auto& [v, r] : tree.rotation)
        if (r.size() > 2)
            return false;
    return true;
}

namespace {

int max_degree(const PlanarTree& t) {
    int d = 0;
    for (const auto& [v, r] : t.rotation)
        d = std::max(d, static_cast<int>(r.size()));
    return d;
}

// Among edges at a maximum-degree vertex, pick the one whose slide target has
// minimal degree; ties by edge id.
EdgeId greedy_choice(const PlanarTree& t) {
    int dmax = max_degree(t);
    int best_score = -1;
    EdgeId best_edge = -1;
    for (const auto& [x, r] : t.rotation) {
        if (static_cast<int>(r.size()) != dmax)
            continue;
        for (EdgeId e : r) {
            EdgeId a_p = t.rotation_successor(x, e);
            int score = t.degree(t.far_end(a_p, x));
            if (best_edge < 0 || score < best_score ||
                (score == best_score && e < best_edge)) {
                best_score = score;
                best_edge = e;
            }
        }
    }
    return best_edge;
}

struct BfsNode {
    PlanarTree tree;
    std::vector<PlanStep> steps;
};

// Deterministic breadth-first search over canonical codes; returns the step
// list of the first line found within the depth budget, or nothing.
std::optional<std::vector<PlanStep>> bfs_to_line(const PlanarTree& start, int max_steps) {
    std::set<std::string> visited{canonical_code(start)};
    std::map<std::string, BfsNode> frontier;
    frontier.emplace(canonical_code(start), BfsNode{start, {}});
    for (int depth = 0; depth < max_steps && !frontier.empty(); ++depth) {
        std::map<std::string, BfsNode> next;
        for (const auto& [code, node] : frontier) {
            for (EdgeId e : node.tree.edge_ids()) {
                ReflectionResult r = reflect_tree(node.tree, e);
                std::string c = canonical_code(r.tree);
                std::vector<PlanStep> steps = node.steps;
                steps.push_back({e, r.new_edge, c});
                if (is_line(r.tree))
                    return steps;
                if (visited.insert(c).second)
                    next.emplace(std::move(c), BfsNode{std::move(r.tree), std::move(steps)});
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

} // namespace

ReflectionPlan reduce_to_line(const PlanarTree& tree, int max_steps) {
    tree.validate();
    if (tree.multiplicity != 1)
        throw Error("reduce_to_line: multiplicity > 1 unsupported");
    if (max_steps <= 0)
        max_steps = 10 * std::max(1, tree.edge_count());

    ReflectionPlan plan;
    plan.initial_code = canonical_code(tree);
    plan.reached_line = false;

    PlanarTree current = tree;
    std::set<std::string> visited{plan.initial_code};
    bool cycled = false;
    while (!is_line(current) && static_cast<int>(plan.steps.size()) < max_steps) {
        EdgeId t = greedy_choice(current);
        ReflectionResult r = reflect_tree(current, t);
        std::string code = canonical_code(r.tree);
        plan.steps.push_back({t, r.new_edge, code});
        current = std::move(r.tree);
        if (!visited.insert(code).second) {
            cycled = true;
            break;
        }
    }

    if (is_line(current)) {
        plan.reached_line = true;
        plan.final_code = canonical_code(current);
        return plan;
    }
    if (cycled) {
        if (auto steps = bfs_to_line(tree, max_steps)) {
            plan.steps = std::move(*steps);
            plan.reached_line = true;
            plan.final_code = plan.steps.empty() ? plan.initial_code : plan.steps.back().code;
            return plan;
        }
    }
    plan.final_code = canonical_code(current);
    return plan;
}

void verify_plan(const PlanarTree& tree, const ReflectionPlan& plan) {
    if (canonical_code(tree) != plan.initial_code)
        throw Error("plan replay: initial code mismatch");
    NumericalInvariants inv = numerical_invariants(tree);
    PlanarTree current = tree;
    for (size_t i = 0; i < plan.steps.size(); ++i) {
        ReflectionResult r = reflect_tree(current, plan.steps[i].edge);
        if (r.new_edge != plan.steps[i].new_edge)
            throw Error("plan replay: rename mismatch at step " + std::to_string(i));
        if (canonical_code(r.tree) != plan.steps[i].code)
            throw Error("plan replay: code mismatch at step " + std::to_string(i));
        if (!(numerical_invariants(r.tree) == inv))
            throw Error("plan replay: numerical invariants changed at step " + std::to_string(i));
        current = std::move(r.tree);
    }
    if (plan.reached_line && !is_line(current))
        throw Error("plan replay: final tree is not a line");
    if (canonical_code(current) != plan.final_code)
        throw Error("plan replay: final code mismatch");
}

} // namespace brauer
