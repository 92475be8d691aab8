#pragma once

#include "brauer/tree.hpp"

#include <string>
#include <vector>

namespace brauer {

// true iff every vertex has degree <= 2
bool is_line(const PlanarTree& tree);

struct PlanStep {
    EdgeId edge;     // edge reflected
    EdgeId new_edge; // its replacement t'
    std::string code; // canonical code after the step
};

struct ReflectionPlan {
    std::string initial_code;
    std::string final_code;
    std::vector<PlanStep> steps;
    bool reached_line;
};

// Greedy peeling of maximum-degree vertices with a breadth-first fallback
// over canonical codes. max_steps = 0 means 10 * edge_count.
ReflectionPlan reduce_to_line(const PlanarTree& tree, int max_steps = 0);

// Replays the plan with reflect_tree and checks every recorded code, the
// numerical invariants along the way, and is_line at the end.
void verify_plan(const PlanarTree& tree, const ReflectionPlan& plan);

} // namespace brauer
