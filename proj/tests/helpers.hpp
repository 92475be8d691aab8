#pragma once

#include "brauer/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace testutil {

inline brauer::PlanarTree make_tree(std::map<int, std::vector<int>> rotation, int mult = 1,
                                    std::optional<int> exceptional = {}) {
    brauer::PlanarTree t;
    t.rotation = std::move(rotation);
    t.multiplicity = mult;
    t.exceptional = exceptional;
    t.normalize();
    t.validate();
    return t;
}

// center 0, leaves 1..n, edge i joins 0 and i; rotation (1, ..., n)
inline brauer::PlanarTree star(int n) {
    std::map<int, std::vector<int>> rot;
    for (int i = 1; i <= n; ++i) {
        rot[0].push_back(i);
        rot[i] = {i};
    }
    return make_tree(std::move(rot));
}

// vertices 0..n, edge i joins i-1 and i
inline brauer::PlanarTree path(int n) {
    std::map<int, std::vector<int>> rot;
    rot[0] = {1};
    for (int v = 1; v < n; ++v)
        rot[v] = {v, v + 1};
    rot[n] = {n};
    return make_tree(std::move(rot));
}

// definition-level plane isomorphism: some vertex bijection carries edges to
// edges and rotations to rotations (same cyclic order), preserving the
// exceptional vertex
inline bool plane_iso_bruteforce(const brauer::PlanarTree& a, const brauer::PlanarTree& b) {
    if (a.multiplicity != b.multiplicity)
        return false;
    auto va = a.vertex_ids();
    auto vb = b.vertex_ids();
    if (va.size() != vb.size() || a.edge_count() != b.edge_count())
        return false;

    std::map<std::pair<int, int>, int> b_edge; // endpoints -> edge id
    for (int e : b.edge_ids()) {
        auto [u, v] = b.endpoints(e);
        b_edge[{u, v}] = e;
    }

    std::vector<size_t> perm(vb.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        auto f = [&](int v) {
            size_t i = std::find(va.begin(), va.end(), v) - va.begin();
            return vb[perm[i]];
        };
        if (a.exceptional.has_value() != b.exceptional.has_value())
            return false;
        if (a.exceptional && f(*a.exceptional) != *b.exceptional)
            continue;
        bool ok = true;
        std::map<int, int> edge_map;
        for (int e : a.edge_ids()) {
            auto [u, v] = a.endpoints(e);
            int fu = f(u), fv = f(v);
            if (fu > fv)
                std::swap(fu, fv);
            auto it = b_edge.find({fu, fv});
            if (it == b_edge.end()) {
                ok = false;
                break;
            }
            edge_map[e] = it->second;
        }
        if (!ok)
            continue;
        for (const auto& [v, rot] : a.rotation) {
            std::vector<int> mapped;
            for (int e : rot)
                mapped.push_back(edge_map[e]);
            const auto& target = b.rotation.at(f(v));
            if (mapped.size() != target.size()) {
                ok = false;
                break;
            }
            if (mapped.empty())
                continue;
            auto it = std::find(target.begin(), target.end(), mapped[0]);
            if (it == target.end()) {
                ok = false;
                break;
            }
            size_t off = it - target.begin();
            for (size_t i = 0; i < mapped.size(); ++i)
                if (mapped[i] != target[(off + i) % target.size()]) {
                    ok = false;
                    break;
                }
            if (!ok)
                break;
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace testutil
