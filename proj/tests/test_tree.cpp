#include "brauer/tree.hpp"

#include "brauer/error.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace brauer;
using testutil::make_tree;
using testutil::path;
using testutil::plane_iso_bruteforce;
using testutil::star;

namespace {

const char* star5_file = R"(# five-edge star
multiplicity 1
vertex v0: 1 2 3 4 5
vertex v1: 1
vertex v2: 2
vertex v3: 3
vertex v4: 4
vertex v5: 5
)";

// Prufer decode: all labeled trees on k vertices, then every rotation system.
std::vector<std::map<int, std::vector<int>>> all_labeled_rotation_trees(int k) {
    std::vector<std::map<int, std::vector<int>>> out;
    int seq_len = k - 2;
    std::vector<int> seq(std::max(0, seq_len), 0);
    auto emit_tree = [&](const std::vector<std::pair<int, int>>& edges) {
        // edges numbered 1..k-1 in the given order
        std::map<int, std::vector<int>> base;
        for (int v = 0; v < k; ++v)
            base[v] = {};
        for (size_t i = 0; i < edges.size(); ++i) {
            base[edges[i].first].push_back(static_cast<int>(i) + 1);
            base[edges[i].second].push_back(static_cast<int>(i) + 1);
        }
        // all rotation systems: fix the first incident edge, permute the rest
        std::vector<std::map<int, std::vector<int>>> partial{{}};
        for (const auto& [v, inc] : base) {
            std::vector<std::vector<int>> rotations;
            if (inc.size() <= 1) {
                rotations.push_back(inc);
            } else {
                std::vector<int> rest(inc.begin() + 1, inc.end());
                std::sort(rest.begin(), rest.end());
                do {
                    std::vector<int> rot{inc[0]};
                    rot.insert(rot.end(), rest.begin(), rest.end());
                    rotations.push_back(rot);
                } while (std::next_permutation(rest.begin(), rest.end()));
            }
            std::vector<std::map<int, std::vector<int>>> grown;
            for (const auto& p : partial)
                for (const auto& rot : rotations) {
                    auto q = p;
                    q[v] = rot;
                    grown.push_back(std::move(q));
                }
            partial = std::move(grown);
        }
        out.insert(out.end(), partial.begin(), partial.end());
    };
    auto decode = [&](const std::vector<int>& s) {
        std::vector<int> degree(k, 1);
        for (int x : s)
            ++degree[x];
        std::vector<std::pair<int, int>> edges;
        std::set<int> leaves;
        for (int v = 0; v < k; ++v)
            if (degree[v] == 1)
                leaves.insert(v);
        std::vector<int> seq2 = s;
        for (int x : seq2) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.push_back({leaf, x});
            if (--degree[x] == 1)
                leaves.insert(x);
        }
        int u = *leaves.begin();
        int v = *std::next(leaves.begin());
        edges.push_back({u, v});
        emit_tree(edges);
    };
    if (k == 2) {
        decode({});
        return out;
    }
    while (true) {
        decode(seq);
        int i = seq_len - 1;
        while (i >= 0 && seq[i] == k - 1) {
            seq[i] = 0;
            --i;
        }
        if (i < 0)
            break;
        ++seq[i];
    }
    return out;
}

} // namespace

TEST_CASE("parse the five-edge star") {
    PlanarTree t = parse_tree(star5_file);
    CHECK(t.vertex_ids().size() == 6);
    CHECK(t.edge_count() == 5);
    CHECK(t.multiplicity == 1);
    CHECK(t.rotation.at(0) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(numerical_invariants(t) == NumericalInvariants{5, 1});
}

TEST_CASE("parse a single edge") {
    PlanarTree t = parse_tree("vertex v0: 1\nvertex v1: 1\n");
    CHECK(t.vertex_ids().size() == 2);
    CHECK(t.edge_count() == 1);
    CHECK(numerical_invariants(t) == NumericalInvariants{1, 1});
}

TEST_CASE("parse rejections name the violated invariant") {
    // edge 3 in three rotation lists
    CHECK_THROWS_WITH_AS(parse_tree("vertex v0: 1 3\nvertex v1: 1 3\nvertex v2: 3\n"),
                         doctest::Contains("edge degree != 2"), Error);
    CHECK_THROWS_WITH_AS(parse_tree("vertex v0: 1 1\nvertex v1: 1\n"),
                         doctest::Contains("duplicate in rotation"), Error);
    // two components
    CHECK_THROWS_WITH_AS(
        parse_tree("vertex v0: 1\nvertex v1: 1\nvertex v2: 2\nvertex v3: 2\n"),
        doctest::Contains("disconnected"), Error);
    // 3 vertices, 3 edges
    CHECK_THROWS_WITH_AS(
        parse_tree("vertex v0: 1 3\nvertex v1: 1 2\nvertex v2: 2 3\n"),
        doctest::Contains("cycle present"), Error);
    CHECK_THROWS_WITH_AS(parse_tree("multiplicity 0\nvertex v0: 1\nvertex v1: 1\n"),
                         doctest::Contains("bad multiplicity"), Error);
    // multiplicity 2 without exceptional vertex
    CHECK_THROWS_WITH_AS(parse_tree("multiplicity 2\nvertex v0: 1\nvertex v1: 1\n"),
                         doctest::Contains("bad multiplicity"), Error);
    CHECK_THROWS_AS(parse_tree("vertex v0 1\nvertex v1: 1\n"), ParseError);
    try {
        parse_tree("vertex v0: 1\nvertex v1: x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col > 0);
    }
}

TEST_CASE("serialize round-trips including rotation order") {
    PlanarTree t = parse_tree(star5_file);
    CHECK(parse_tree(serialize_tree(t)) == t);

    PlanarTree m4 = make_tree({{0, {1}}, {1, {1, 2}}, {2, {2, 3}}, {3, {3}}}, 4, 1);
    CHECK(numerical_invariants(m4) == NumericalInvariants{3, 4});
    CHECK(parse_tree(serialize_tree(m4)) == m4);

    // rotation order must survive: two different embeddings of the 4-star arm
    PlanarTree a = make_tree({{0, {1, 2, 3}}, {1, {1}}, {2, {2}}, {3, {3, 4}}, {4, {4}}});
    CHECK(parse_tree(serialize_tree(a)) == a);
}

TEST_CASE("canonical code is relabeling invariant") {
    PlanarTree s3 = star(3);
    // same star, different ids and rotated rotation list
    PlanarTree s3b = make_tree({{7, {9, 8, 7}}, {4, {7}}, {5, {8}}, {6, {9}}});
    CHECK(canonical_code(s3) == canonical_code(s3b));
    CHECK(plane_iso_bruteforce(s3, s3b));

    CHECK(canonical_code(path(3)) != canonical_code(star(3)));
    CHECK_FALSE(plane_iso_bruteforce(path(3), star(3)));
}

TEST_CASE("T-shaped tree: arm order around the branch vertex does not matter") {
    // arms: one 2-edge path (edges 1,2), two leaves (edges 3,4)
    PlanarTree long_first =
        make_tree({{0, {1, 3, 4}}, {1, {1, 2}}, {2, {2}}, {3, {3}}, {4, {4}}});
    PlanarTree long_middle =
        make_tree({{0, {3, 1, 4}}, {1, {1, 2}}, {2, {2}}, {3, {3}}, {4, {4}}});
    // derived oracle: definition-level isomorphism search agrees
    CHECK(plane_iso_bruteforce(long_first, long_middle));
    CHECK(canonical_code(long_first) == canonical_code(long_middle));
}

TEST_CASE("canonical code agrees with brute-force isomorphism on all 4-edge trees") {
    auto all = all_labeled_rotation_trees(5);
    // sample pairs across the sweep
    std::vector<PlanarTree> trees;
    for (size_t i = 0; i < all.size(); i += 97)
        trees.push_back(make_tree(all[i]));
    for (size_t i = 0; i < trees.size(); ++i)
        for (size_t j = i + 1; j < trees.size(); ++j) {
            bool same_code = canonical_code(trees[i]) == canonical_code(trees[j]);
            CHECK(same_code == plane_iso_bruteforce(trees[i], trees[j]));
        }
}

TEST_CASE("mirror images are distinct plane trees") {
    // a degree-3 vertex with arms of lengths 1, 2, 3: swapping two arms in
    // the rotation gives the mirror image, which is a different plane tree
    auto arms = [](std::vector<int> rot_at_center) {
        return make_tree({{0, std::move(rot_at_center)},
                          {1, {1}},
                          {2, {2, 3}},
                          {3, {3}},
                          {4, {4, 5}},
                          {5, {5, 6}},
                          {6, {6}}});
    };
    PlanarTree plain = arms({1, 2, 4});
    PlanarTree mirror = arms({1, 4, 2});
    CHECK(canonical_code(plain) != canonical_code(mirror));
    CHECK_FALSE(plane_iso_bruteforce(plain, mirror));
    // both classes appear among the 6-edge representatives
    std::set<std::string> codes;
    for (const auto& t : enumerate_plane_trees(6))
        codes.insert(canonical_code(t));
    CHECK(codes.count(canonical_code(plain)) == 1);
    CHECK(codes.count(canonical_code(mirror)) == 1);
}

TEST_CASE("enumerate_plane_trees counts and distinctness") {
    CHECK(enumerate_plane_trees(1).size() == 1);
    CHECK(enumerate_plane_trees(2).size() == 1);

    // oracle for k4: all labeled trees on 5 vertices with all rotations,
    // quotiented by canonical code
    std::set<std::string> codes;
    for (const auto& rot : all_labeled_rotation_trees(5))
        codes.insert(canonical_code(make_tree(rot)));
    auto enumerated = enumerate_plane_trees(4);
    CHECK(enumerated.size() == codes.size());
    CHECK(codes.size() == 3); // k4, frozen from the oracle above

    std::set<std::string> enum_codes;
    for (const auto& t : enumerated) {
        t.validate();
        CHECK(numerical_invariants(t).multiplicity == 1);
        CHECK(numerical_invariants(t).edge_count == 4);
        CHECK(enum_codes.insert(canonical_code(t)).second);
    }
    CHECK(enum_codes == codes);

    CHECK_THROWS_WITH_AS(enumerate_plane_trees(0), doctest::Contains("bound exceeded"), Error);
    CHECK_THROWS_WITH_AS(enumerate_plane_trees(11), doctest::Contains("bound exceeded"), Error);
}

TEST_CASE("every 5-edge labeled rotation tree appears among the representatives") {
    std::set<std::string> enum_codes;
    for (const auto& t : enumerate_plane_trees(5))
        enum_codes.insert(canonical_code(t));
    auto all = all_labeled_rotation_trees(6);
    for (size_t i = 0; i < all.size(); i += 211)
        CHECK(enum_codes.count(canonical_code(make_tree(all[i]))) == 1);
}

TEST_CASE("render_dot") {
    PlanarTree one = parse_tree("vertex v0: 1\nvertex v1: 1\n");
    std::string d = render_dot(one);
    CHECK(d.find("v0 -- v1 [label=\"1\"]") != std::string::npos);

    PlanarTree s5 = star(5);
    std::string dot = render_dot(s5);
    int nodes = 0, links = 0;
    for (int v = 0; v <= 5; ++v)
        if (dot.find("  v" + std::to_string(v) + ";") != std::string::npos)
            ++nodes;
    for (int e = 1; e <= 5; ++e)
        if (dot.find("[label=\"" + std::to_string(e) + "\"]") != std::string::npos)
            ++links;
    CHECK(nodes == 6);
    CHECK(links == 5);
    CHECK(render_dot(s5) == dot);
}
