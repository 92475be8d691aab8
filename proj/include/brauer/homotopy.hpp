#pragma once

#include "brauer/algebra.hpp"

#include <map>
#include <vector>

namespace brauer {

// Matrix of algebra elements; entry (r, c) lies in e_{row} A e_{col} and acts
// on projectives by left multiplication, so composition is the algebra
// product row-by-column.
struct AlgMat {
    std::vector<int> row_labels;
    std::vector<int> col_labels;
    std::vector<gf::Vec> entries; // row-major

    static AlgMat zero(const AlgebraTable& alg, std::vector<int> rows, std::vector<int> cols);
    gf::Vec& at(int r, int c) { return entries[static_cast<size_t>(r) * col_labels.size() + c]; }
    const gf::Vec& at(int r, int c) const {
        return entries[static_cast<size_t>(r) * col_labels.size() + c];
    }
    bool is_zero() const;
};

AlgMat compose(const AlgebraTable& alg, const AlgMat& g, const AlgMat& f); // g after f

// Bounded complex of projectives; terms[i] lists the projective summand
// labels in degree min_degree + i, diffs[i] maps terms[i] to terms[i+1].
struct ProjComplex {
    int min_degree = 0;
    std::vector<std::vector<int>> terms;
    std::vector<AlgMat> diffs;

    int max_degree() const { return min_degree + static_cast<int>(terms.size()) - 1; }
    const std::vector<int>* term(int degree) const;
    const AlgMat* diff(int degree) const; // map out of `degree`, or null
};

ProjComplex module_complex(int vertex); // P_v concentrated in degree 0
void validate_complex(const AlgebraTable& alg, const ProjComplex& c);
ProjComplex direct_sum(const AlgebraTable& alg, const std::vector<ProjComplex>& parts);

// Minimal injective copresentation 0 -> S_t -> P_t -> E1 over a selfinjective
// algebra with E(S_t) = P_t; E1 summands sorted by vertex id.
struct InjectivePresentation {
    int t;
    int e0;                  // = t
    std::vector<int> e1;     // summand vertices
    AlgMat f;                // P_t -> E1
};

InjectivePresentation injective_presentation(const AlgebraTable& alg, int t);

// Mapping cone of f with E0 in degree -1 and E1 in degree 0.
ProjComplex mapping_cone(const AlgebraTable& alg, const InjectivePresentation& pres);

// Indecomposable summands of the tilting complex in slot order: the sorted
// quiver vertices with the cone in t's slot.
std::vector<ProjComplex> tilting_summands(const AlgebraTable& alg, int t);
ProjComplex tilting_complex(const AlgebraTable& alg, int t);

// Chain map f : C -> D[j]; comps[d] : C^d -> D^{d+j}.
struct ChainMap {
    int j = 0;
    std::map<int, AlgMat> comps;
};

ChainMap compose_chain(const AlgebraTable& alg, const ChainMap& g, const ChainMap& f);

// Hom space in the homotopy category between bounded complexes of
// projectives: chain maps modulo the null-homotopic ones, by exact rank
// computation over F_p.
class HomSpace {
public:
    HomSpace(const AlgebraTable& alg, const ProjComplex& C, const ProjComplex& D, int j);

    int dim() const { return dim_; }
    // basis of the full chain-map space Z (contains the null-homotopic ones)
    const std::vector<ChainMap>& chain_basis() const { return chain_basis_; }
    ChainMap identity() const; // requires C == D structurally and j == 0

    gf::Vec flatten(const ChainMap& m) const;
    ChainMap unflatten(const gf::Vec& v) const;
    bool is_chain_map(const ChainMap& m) const;
    bool null_homotopic(const ChainMap& m) const;
    const gf::RowSpace& homotopy_span() const { return homotopy_span_; }
    int flat_size() const { return flat_size_; }

private:
    struct Block {
        int degree;
        int row; // index into D term at degree+j
        int col; // index into C term at degree
        std::vector<int> hom_ids; // algebra basis ids of e_row A e_col
        int offset;
    };

    const AlgebraTable& alg_;
    ProjComplex C_, D_;
    int j_;
    std::vector<Block> blocks_;
    int flat_size_ = 0;
    std::vector<ChainMap> chain_basis_;
    gf::RowSpace homotopy_span_;
    gf::RowSpace chain_span_;
    int dim_ = 0;
};

int hom_dim(const AlgebraTable& alg, const ProjComplex& C, const ProjComplex& D, int j);

} // namespace brauer
