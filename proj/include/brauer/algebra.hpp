#pragma once

#include "brauer/gf.hpp"
#include "brauer/quiver.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace brauer {

// One basis element of the algebra: the class of a path, tagged with the
// path's source and target vertex and its radical layer.
struct PathClass {
    int src;
    int tgt;
    int layer;                   // max k with the class in rad^k
    std::vector<int> rep_arrows; // representative, traversal order
};

// Sparse coordinate vector over the algebra basis.
using SparseVec = std::vector<std::pair<int, std::uint32_t>>;

struct BuildOptions {
    int length_cap = 0;           // 0: 2 * (#vertices + 1), raised to fit relations
    long long max_raw_paths = 200000;
};

// A finite-dimensional quotient of a path algebra over F_p, with the
// multiplication table certified at build time: associativity on all basis
// triples, the defining relations, the idempotent decomposition, and the
// spanning window all verified, so the table is exactly the presented
// algebra or construction throws.
class AlgebraTable {
public:
    static AlgebraTable build(const QuiverWithRelations& q, long long p, BuildOptions opt = {});

    long long modulus() const { return p_; }
    const QuiverWithRelations& presentation() const { return quiver_; }
    const std::vector<int>& vertices() const { return vertices_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<PathClass>& basis() const { return basis_; }

    int idempotent_index(int vertex) const;
    int arrow_basis_index(int arrow_id) const;

    // product of two basis classes (zero when sources/targets mismatch)
    const SparseVec& product(int i, int j) const;
    // product of coordinate vectors, left after right
    gf::Vec multiply(const gf::Vec& a, const gf::Vec& b) const;
    gf::Vec class_of_path(const std::vector<int>& traversal_arrows) const;
    gf::Vec unit_vec(int basis_index) const;

    // basis indices of e_y A e_x = Hom(P_x, P_y)
    const std::vector<int>& hom_basis(int x, int y) const;
    int cartan_entry(int x, int y) const { return static_cast<int>(hom_basis(x, y).size()); }

    // socle of P_x as a coordinate vector (simple for selfinjective input)
    const gf::Vec& socle(int x) const;
    bool socles_simple() const { return socles_simple_; }
    // x -> vertex of soc(P_x); the identity iff the algebra is weakly symmetric
    const std::map<int, int>& nakayama() const { return nakayama_; }
    bool weakly_symmetric() const;
    bool has_loop_at(int vertex) const;

private:
    AlgebraTable() = default;

    long long p_ = 2;
    QuiverWithRelations quiver_;
    std::vector<int> vertices_;
    std::vector<PathClass> basis_;
    std::map<int, int> idempotent_;
    std::map<int, int> arrow_basis_;
    std::vector<SparseVec> table_; // dim*dim
    std::map<std::pair<int, int>, std::vector<int>> hom_basis_;
    std::map<int, gf::Vec> socle_;
    std::map<int, int> nakayama_;
    bool socles_simple_ = false;

    void derive_structure();
    void certify() const;
};

} // namespace brauer
