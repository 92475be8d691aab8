#pragma once

#include "brauer/quiver.hpp"

namespace testutil {

// The 4-vertex selfinjective algebra: two length-4 cycles beta (1->2->3->4->1,
// ids 0..3) and alpha (1->4->3->2->1, ids 4..7), commutation squares equal,
// mixed products zero. Vertex names 1..4.
inline brauer::QuiverWithRelations four_cycle_lambda() {
    using brauer::Arrow;
    using brauer::Relation;
    brauer::QuiverWithRelations q;
    q.vertices = {1, 2, 3, 4};
    q.arrows = {
        {0, 1, 2, 100}, // beta1
        {1, 2, 3, 100}, // beta2
        {2, 3, 4, 100}, // beta3
        {3, 4, 1, 100}, // beta4
        {4, 2, 1, 101}, // alpha1
        {5, 3, 2, 101}, // alpha2
        {6, 4, 3, 101}, // alpha3
        {7, 1, 4, 101}, // alpha4
    };
    auto eq = [](std::vector<int> l, std::vector<int> r) {
        return Relation{Relation::Kind::equality, std::move(l), std::move(r)};
    };
    auto zero = [](std::vector<int> l) {
        return Relation{Relation::Kind::zero, std::move(l), {}};
    };
    q.relations = {
        eq({1, 0}, {6, 7}), // beta2 beta1 = alpha3 alpha4
        eq({3, 2}, {4, 5}), // beta4 beta3 = alpha1 alpha2
        eq({0, 4}, {5, 1}), // beta1 alpha1 = alpha2 beta2
        eq({2, 6}, {7, 3}), // beta3 alpha3 = alpha4 beta4
        zero({7, 4}),       // alpha4 alpha1
        zero({5, 6}),       // alpha2 alpha3
        zero({0, 3}),       // beta1 beta4
        zero({2, 1}),       // beta3 beta2
        zero({4, 0}),       // alpha1 beta1
        zero({1, 5}),       // beta2 alpha2
        zero({6, 2}),       // alpha3 beta3
        zero({3, 7}),       // beta4 alpha4
    };
    return q;
}

// Its reflection at vertex 2: vertices 1, 3, 4 and 5 (the new vertex), two
// length-3 cycles gamma (5->4->1->5, ids 0..2) and delta (5->4->3->5, ids
// 3..5) sharing the path through 4.
inline brauer::QuiverWithRelations four_cycle_gamma() {
    using brauer::Relation;
    brauer::QuiverWithRelations q;
    q.vertices = {1, 3, 4, 5};
    q.arrows = {
        {0, 1, 5, 200}, // gamma1
        {1, 4, 1, 200}, // gamma2
        {2, 5, 4, 200}, // gamma3
        {3, 3, 5, 201}, // delta1
        {4, 4, 3, 201}, // delta2
        {5, 5, 4, 201}, // delta3
    };
    auto eq = [](std::vector<int> l, std::vector<int> r) {
        return Relation{Relation::Kind::equality, std::move(l), std::move(r)};
    };
    auto zero = [](std::vector<int> l) {
        return Relation{Relation::Kind::zero, std::move(l), {}};
    };
    q.relations = {
        eq({0, 1, 2}, {3, 4, 5}), // gamma1 gamma2 gamma3 = delta1 delta2 delta3
        eq({5, 0, 1}, {2, 3, 4}), // delta3 gamma1 gamma2 = gamma3 delta1 delta2
        zero({2, 0}),             // gamma3 gamma1
        zero({5, 3}),             // delta3 delta1
        zero({1, 5}),             // gamma2 delta3
        zero({4, 2}),             // delta2 gamma3
        zero({2, 3, 4, 5}),       // gamma3 delta1 delta2 delta3
        zero({5, 0, 1, 2}),       // delta3 gamma1 gamma2 gamma3
    };
    return q;
}

} // namespace testutil
