#include "brauer/algebra.hpp"

#include "brauer/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace brauer {

namespace {

struct RawPath {
    int src;
    int tgt;
    std::vector<int> arrows; // traversal order
};

// Surviving path enumeration: walks up to the cap containing no zero-relation
// monomial. New subwords all end at the new arrow, so a suffix check per
// extension suffices.
struct PathSpace {
    std::vector<RawPath> paths;
    std::map<int, int> trivial;               // vertex -> path index
    std::map<std::pair<int, int>, int> child; // (path, arrow) -> path

    int lookup(int start_vertex, const std::vector<int>& arrows) const {
        auto it = trivial.find(start_vertex);
        if (it == trivial.end())
            return -1;
        int node = it->second;
        for (int a : arrows) {
            auto jt = child.find({node, a});
            if (jt == child.end())
                return -1;
            node = jt->second;
        }
        return node;
    }
};

bool has_suffix(const std::vector<int>& w, const std::vector<int>& suffix) {
    if (suffix.size() > w.size())
        return false;
    return std::equal(suffix.rbegin(), suffix.rend(), w.rbegin());
}

bool has_subword(const std::vector<int>& w, const std::vector<int>& m) {
    if (m.size() > w.size())
        return false;
    for (size_t start = 0; start + m.size() <= w.size(); ++start)
        if (std::equal(m.begin(), m.end(), w.begin() + start))
            return true;
    return false;
}

PathSpace enumerate_paths(const QuiverWithRelations& q, int cap, long long max_raw,
                          const std::vector<std::vector<int>>& zero_monomials) {
    PathSpace ps;
    for (int v : q.vertices) {
        ps.trivial[v] = static_cast<int>(ps.paths.size());
        ps.paths.push_back({v, v, {}});
    }
    std::vector<int> frontier(ps.paths.size());
    std::iota(frontier.begin(), frontier.end(), 0);
    for (int len = 1; len <= cap; ++len) {
        std::vector<int> next;
        for (int idx : frontier)
            for (const auto& a : q.arrows) {
                if (ps.paths[idx].tgt != a.src)
                    continue;
                std::vector<int> w = ps.paths[idx].arrows;
                w.push_back(a.id);
                bool dead = false;
                for (const auto& m : zero_monomials)
                    if (has_suffix(w, m)) {
                        dead = true;
                        break;
                    }
                if (dead)
                    continue;
                int id = static_cast<int>(ps.paths.size());
                if (id > max_raw)
                    throw Error("build_algebra: raw path budget exceeded; "
                                "infinite-dimensional input?");
                ps.child[{idx, a.id}] = id;
                ps.paths.push_back({ps.paths[idx].src, a.dst, std::move(w)});
                next.push_back(id);
            }
        frontier = std::move(next);
    }
    return ps;
}

std::vector<int> traversal_of(const std::vector<int>& right_to_left) {
    return {right_to_left.rbegin(), right_to_left.rend()};
}

} // namespace

AlgebraTable AlgebraTable::build(const QuiverWithRelations& q, long long p, BuildOptions opt) {
    if (!gf::is_prime(p))
        throw Error("build_algebra: " + std::to_string(p) + " is not prime");
    q.validate();

    int maxrel = 0;
    for (const auto& rel : q.relations) {
        if (rel.left.size() < 2 || (rel.kind == Relation::Kind::equality && rel.right.size() < 2))
            throw Error("build_algebra: non-admissible relation (length < 2)");
        maxrel = std::max(maxrel, static_cast<int>(rel.left.size()));
        maxrel = std::max(maxrel, static_cast<int>(rel.right.size()));
    }
    int cap = opt.length_cap > 0 ? opt.length_cap
                                 : 2 * (static_cast<int>(q.vertices.size()) + 1);
    cap = std::max(cap, 2 * maxrel);

    std::vector<std::vector<int>> zero_monomials;
    for (const auto& rel : q.relations)
        if (rel.kind == Relation::Kind::zero)
            zero_monomials.push_back(traversal_of(rel.left));

    PathSpace ps = enumerate_paths(q, cap, opt.max_raw_paths, zero_monomials);
    int npaths = static_cast<int>(ps.paths.size());

    // longer paths become pivots, so the quotient basis prefers short ones
    std::vector<int> priority(npaths);
    std::iota(priority.begin(), priority.end(), 0);
    std::stable_sort(priority.begin(), priority.end(), [&](int a, int b) {
        return ps.paths[a].arrows.size() > ps.paths[b].arrows.size();
    });

    gf::RowSpace ideal(p, priority);
    for (const auto& rel : q.relations) {
        if (rel.kind != Relation::Kind::equality)
            continue;
        std::vector<int> lt = traversal_of(rel.left);
        std::vector<int> rt = traversal_of(rel.right);
        int rel_src = q.path_source(rel.left);
        int rel_tgt = q.path_target(rel.left);
        size_t min_len = std::min(lt.size(), rt.size());
        for (int u = 0; u < npaths; ++u) {
            if (ps.paths[u].src != rel_tgt)
                continue;
            for (int v = 0; v < npaths; ++v) {
                if (ps.paths[v].tgt != rel_src)
                    continue;
                if (ps.paths[u].arrows.size() + min_len + ps.paths[v].arrows.size() >
                    static_cast<size_t>(cap))
                    continue;
                // column of u (mid) v: dead paths are zero at any length, live
                // ones must fit under the cap or the generator is unusable
                bool usable = true;
                auto glue = [&](const std::vector<int>& mid) {
                    std::vector<int> w = ps.paths[v].arrows;
                    w.insert(w.end(), mid.begin(), mid.end());
                    w.insert(w.end(), ps.paths[u].arrows.begin(), ps.paths[u].arrows.end());
                    for (const auto& m : zero_monomials)
                        if (has_subword(w, m))
                            return -1;
                    if (w.size() > static_cast<size_t>(cap)) {
                        usable = false;
                        return -1;
                    }
                    int col = ps.lookup(ps.paths[v].src, w);
                    if (col < 0)
                        throw Error("build_algebra: live path missing from the enumeration");
                    return col;
                };
                int cl = glue(lt);
                int cr = glue(rt);
                if (!usable || (cl < 0 && cr < 0))
                    continue;
                gf::Vec row(npaths, 0);
                if (cl >= 0)
                    row[cl] = 1;
                if (cr >= 0)
                    row[cr] = static_cast<std::uint32_t>((p - 1 + row[cr]) % p);
                if (!gf::is_zero(row))
                    ideal.add(std::move(row));
            }
        }
    }

    AlgebraTable alg;
    alg.p_ = p;
    alg.quiver_ = q;
    alg.vertices_ = q.vertices;
    std::sort(alg.vertices_.begin(), alg.vertices_.end());

    // quotient basis = non-pivot path columns, shortest first
    std::vector<int> basis_cols;
    for (int i = 0; i < npaths; ++i)
        if (!ideal.is_pivot(i))
            basis_cols.push_back(i);
    std::stable_sort(basis_cols.begin(), basis_cols.end(), [&](int a, int b) {
        return ps.paths[a].arrows.size() < ps.paths[b].arrows.size();
    });
    std::vector<int> col_to_basis(npaths, -1);
    for (size_t b = 0; b < basis_cols.size(); ++b)
        col_to_basis[basis_cols[b]] = static_cast<int>(b);

    size_t kstar = basis_cols.empty() ? 0 : ps.paths[basis_cols.back()].arrows.size();
    if (2 * kstar > static_cast<size_t>(cap) || kstar + 1 > static_cast<size_t>(cap))
        throw Error("build_algebra: basis paths reach the length cap; "
                    "infinite-dimensional input?");

    for (int col : basis_cols) {
        const RawPath& rp = ps.paths[col];
        alg.basis_.push_back({rp.src, rp.tgt, 0, rp.arrows});
        if (rp.arrows.empty())
            alg.idempotent_[rp.src] = static_cast<int>(alg.basis_.size()) - 1;
        else if (rp.arrows.size() == 1)
            alg.arrow_basis_[rp.arrows[0]] = static_cast<int>(alg.basis_.size()) - 1;
    }
    int dim = alg.dim();

    // class coordinates of an arbitrary surviving path
    std::vector<SparseVec> class_memo(npaths);
    std::vector<bool> memo_done(npaths, false);
    auto class_of = [&](int col) -> const SparseVec& {
        if (!memo_done[col]) {
            gf::Vec unit(npaths, 0);
            unit[col] = 1;
            gf::Vec res = ideal.residue(std::move(unit));
            SparseVec out;
            for (int i = 0; i < npaths; ++i)
                if (res[i] != 0) {
                    if (col_to_basis[i] < 0)
                        throw Error("build_algebra: residue hit a pivot column");
                    out.emplace_back(col_to_basis[i], res[i]);
                }
            std::sort(out.begin(), out.end());
            class_memo[col] = std::move(out);
            memo_done[col] = true;
        }
        return class_memo[col];
    };

    alg.table_.assign(static_cast<size_t>(dim) * dim, {});
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const PathClass& bi = alg.basis_[i];
            const PathClass& bj = alg.basis_[j];
            if (bi.src != bj.tgt)
                continue;
            std::vector<int> w = bj.rep_arrows;
            w.insert(w.end(), bi.rep_arrows.begin(), bi.rep_arrows.end());
            int col = ps.lookup(bj.src, w);
            if (col >= 0)
                alg.table_[static_cast<size_t>(i) * dim + j] = class_of(col);
        }

    alg.certify();
    alg.derive_structure();
    return alg;
}

int AlgebraTable::idempotent_index(int vertex) const {
    auto it = idempotent_.find(vertex);
    if (it == idempotent_.end())
        throw Error("unknown vertex " + std::to_string(vertex));
    return it->second;
}

int AlgebraTable::arrow_basis_index(int arrow_id) const {
    auto it = arrow_basis_.find(arrow_id);
    if (it == arrow_basis_.end())
        throw Error("arrow " + std::to_string(arrow_id) + " has no basis class");
    return it->second;
}

const SparseVec& AlgebraTable::product(int i, int j) const {
    return table_[static_cast<size_t>(i) * dim() + j];
}

gf::Vec AlgebraTable::multiply(const gf::Vec& a, const gf::Vec& b) const {
    gf::Vec out(dim(), 0);
    for (int i = 0; i < dim(); ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < dim(); ++j) {
            if (b[j] == 0)
                continue;
            long long c = static_cast<long long>(a[i]) * b[j] % p_;
            for (const auto& [k, coef] : product(i, j))
                out[k] = static_cast<std::uint32_t>((out[k] + c * coef) % p_);
        }
    }
    return out;
}

gf::Vec AlgebraTable::class_of_path(const std::vector<int>& traversal_arrows) const {
    if (traversal_arrows.empty())
        throw Error("class_of_path: empty path needs a vertex; use unit_vec");
    gf::Vec acc = unit_vec(arrow_basis_index(traversal_arrows[0]));
    for (size_t i = 1; i < traversal_arrows.size(); ++i)
        acc = multiply(unit_vec(arrow_basis_index(traversal_arrows[i])), acc);
    return acc;
}

gf::Vec AlgebraTable::unit_vec(int basis_index) const {
    gf::Vec v(dim(), 0);
    v[basis_index] = 1;
    return v;
}

const std::vector<int>& AlgebraTable::hom_basis(int x, int y) const {
    static const std::vector<int> empty;
    auto it = hom_basis_.find({x, y});
    return it == hom_basis_.end() ? empty : it->second;
}

const gf::Vec& AlgebraTable::socle(int x) const {
    auto it = socle_.find(x);
    if (it == socle_.end())
        throw Error("socle: unknown vertex " + std::to_string(x));
    return it->second;
}

bool AlgebraTable::weakly_symmetric() const {
    if (!socles_simple_)
        return false;
    for (const auto& [x, y] : nakayama_)
        if (x != y)
            return false;
    return true;
}

bool AlgebraTable::has_loop_at(int vertex) const {
    for (const auto& a : quiver_.arrows)
        if (a.src == vertex && a.dst == vertex)
            return true;
    return false;
}

void AlgebraTable::certify() const {
    int n = dim();
    // idempotent laws
    for (int v : vertices_) {
        int ev = idempotent_index(v);
        for (int w : vertices_) {
            int ew = idempotent_index(w);
            const SparseVec& pr = product(ev, ew);
            if (v == w) {
                if (pr.size() != 1 || pr[0].first != ev || pr[0].second != 1)
                    throw Error("certify: e_v not idempotent");
            } else if (!pr.empty()) {
                throw Error("certify: idempotents not orthogonal");
            }
        }
    }
    for (int b = 0; b < n; ++b) {
        const SparseVec& le = product(idempotent_index(basis_[b].tgt), b);
        const SparseVec& re = product(b, idempotent_index(basis_[b].src));
        SparseVec expect{{b, 1}};
        if (le != expect || re != expect)
            throw Error("certify: unit decomposition failed on basis element");
    }
    // associativity on all basis triples, using the sparse table
    auto mul_left = [&](const SparseVec& a, int k) {
        std::map<int, long long> acc;
        for (const auto& [m, c] : a)
            for (const auto& [t, d] : product(m, k))
                acc[t] = (acc[t] + static_cast<long long>(c) * d) % p_;
        SparseVec out;
        for (const auto& [t, c] : acc)
            if (c % p_ != 0)
                out.emplace_back(t, static_cast<std::uint32_t>(c % p_));
        return out;
    };
    auto mul_right = [&](int i, const SparseVec& b) {
        std::map<int, long long> acc;
        for (const auto& [m, c] : b)
            for (const auto& [t, d] : product(i, m))
                acc[t] = (acc[t] + static_cast<long long>(c) * d) % p_;
        SparseVec out;
        for (const auto& [t, c] : acc)
            if (c % p_ != 0)
                out.emplace_back(t, static_cast<std::uint32_t>(c % p_));
        return out;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (basis_[i].src != basis_[j].tgt)
                continue;
            const SparseVec& ij = product(i, j);
            for (int k = 0; k < n; ++k) {
                if (basis_[j].src != basis_[k].tgt)
                    continue;
                if (mul_left(ij, k) != mul_right(i, product(j, k)))
                    throw Error("certify: associativity failed");
            }
        }
    // the table reproduces each basis path by folding its arrows
    for (int b = 0; b < n; ++b) {
        if (basis_[b].rep_arrows.empty())
            continue;
        gf::Vec folded = class_of_path(basis_[b].rep_arrows);
        gf::Vec expect(n, 0);
        expect[b] = 1;
        if (folded != expect)
            throw Error("certify: basis path does not fold to itself");
    }
    // defining relations hold under table folding
    for (const auto& rel : quiver_.relations) {
        gf::Vec left = class_of_path(traversal_of(rel.left));
        if (rel.kind == Relation::Kind::zero) {
            if (!gf::is_zero(left))
                throw Error("certify: zero relation is nonzero in the table");
        } else {
            gf::Vec right = class_of_path(traversal_of(rel.right));
            if (left != right)
                throw Error("certify: equality relation fails in the table");
        }
    }
}

void AlgebraTable::derive_structure() {
    int n = dim();
    for (int b = 0; b < n; ++b)
        hom_basis_[{basis_[b].src, basis_[b].tgt}].push_back(b);

    // radical layers: rad^k is spanned by the length->=k path classes
    std::vector<gf::Vec> layer_vecs;
    for (int b = 0; b < n; ++b)
        if (!basis_[b].rep_arrows.empty())
            layer_vecs.push_back(unit_vec(b));
    int layer = 1;
    while (!layer_vecs.empty()) {
        gf::RowSpace span(p_, n);
        for (const auto& v : layer_vecs)
            span.add(v);
        if (span.dim() == 0)
            break;
        for (int b = 0; b < n; ++b)
            if (span.contains(unit_vec(b)))
                basis_[b].layer = layer;
        std::vector<gf::Vec> next;
        for (const auto& v : layer_vecs)
            for (const auto& [a, idx] : arrow_basis_) {
                gf::Vec w = multiply(unit_vec(idx), v);
                if (!gf::is_zero(w))
                    next.push_back(std::move(w));
            }
        layer_vecs = std::move(next);
        ++layer;
        if (layer > n + 2)
            throw Error("radical filtration does not terminate");
    }

    // socle of each projective P_x and the induced Nakayama map
    socles_simple_ = true;
    for (int x : vertices_) {
        std::vector<int> cols; // basis of P_x = e_x A
        for (int b = 0; b < n; ++b)
            if (basis_[b].tgt == x)
                cols.push_back(b);
        gf::FpMat sys(p_, 0, static_cast<int>(cols.size()));
        for (const auto& [aid, aidx] : arrow_basis_) {
            std::vector<gf::Vec> images;
            for (int c : cols)
                images.push_back(multiply(unit_vec(c), unit_vec(aidx)));
            for (int out = 0; out < n; ++out) {
                gf::Vec row(cols.size(), 0);
                bool nonzero = false;
                for (size_t ci = 0; ci < cols.size(); ++ci) {
                    row[ci] = images[ci][out];
                    nonzero |= row[ci] != 0;
                }
                if (nonzero)
                    sys.add_row(row);
            }
        }
        auto ns = sys.nullspace();
        if (ns.size() != 1) {
            socles_simple_ = false;
            continue;
        }
        gf::Vec soc(n, 0);
        int src = -1;
        bool mixed = false;
        for (size_t ci = 0; ci < cols.size(); ++ci) {
            soc[cols[ci]] = ns[0][ci];
            if (ns[0][ci] != 0) {
                if (src < 0)
                    src = basis_[cols[ci]].src;
                else if (src != basis_[cols[ci]].src)
                    mixed = true;
            }
        }
        if (mixed || src < 0) {
            socles_simple_ = false;
            continue;
        }
        socle_[x] = std::move(soc);
        nakayama_[x] = src;
    }
    if (socles_simple_) {
        std::set<int> image;
        for (const auto& [x, y] : nakayama_)
            image.insert(y);
        if (image.size() != vertices_.size())
            socles_simple_ = false;
    }
}

} // namespace brauer
