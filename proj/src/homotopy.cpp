#include "brauer/homotopy.hpp"

#include "brauer/error.hpp"

#include <algorithm>
#include <set>

namespace brauer {

AlgMat AlgMat::zero(const AlgebraTable& alg, std::vector<int> rows, std::vector<int> cols) {
    AlgMat m;
    m.row_labels = std::move(rows);
    m.col_labels = std::move(cols);
    m.entries.assign(m.row_labels.size() * m.col_labels.size(), gf::Vec(alg.dim(), 0));
    return m;
}

bool AlgMat::is_zero() const {
    for (const auto& e : entries)
        if (!gf::is_zero(e))
            return false;
    return true;
}

AlgMat compose(const AlgebraTable& alg, const AlgMat& g, const AlgMat& f) {
    if (g.col_labels != f.row_labels)
        throw Error("compose: shape mismatch");
    AlgMat out = AlgMat::zero(alg, g.row_labels, f.col_labels);
    long long p = alg.modulus();
    for (size_t r = 0; r < g.row_labels.size(); ++r)
        for (size_t c = 0; c < f.col_labels.size(); ++c) {
            gf::Vec acc(alg.dim(), 0);
            for (size_t k = 0; k < g.col_labels.size(); ++k) {
                gf::Vec term = alg.multiply(g.at(static_cast<int>(r), static_cast<int>(k)),
                                            f.at(static_cast<int>(k), static_cast<int>(c)));
                acc = gf::add(acc, term, p);
            }
            out.at(static_cast<int>(r), static_cast<int>(c)) = std::move(acc);
        }
    return out;
}

const std::vector<int>* ProjComplex::term(int degree) const {
    int i = degree - min_degree;
    if (i < 0 || i >= static_cast<int>(terms.size()))
        return nullptr;
    return &terms[i];
}

const AlgMat* ProjComplex::diff(int degree) const {
    int i = degree - min_degree;
    if (i < 0 || i >= static_cast<int>(diffs.size()))
        return nullptr;
    return &diffs[i];
}

ProjComplex module_complex(int vertex) {
    ProjComplex c;
    c.min_degree = 0;
    c.terms = {{vertex}};
    return c;
}

void validate_complex(const AlgebraTable& alg, const ProjComplex& c) {
    if (c.terms.empty())
        throw Error("empty complex");
    if (c.diffs.size() + 1 != c.terms.size())
        throw Error("complex: differentials do not match terms");
    for (size_t i = 0; i < c.diffs.size(); ++i) {
        const AlgMat& d = c.diffs[i];
        if (d.col_labels != c.terms[i] || d.row_labels != c.terms[i + 1])
            throw Error("complex: differential labels mismatch");
        for (size_t r = 0; r < d.row_labels.size(); ++r)
            for (size_t cidx = 0; cidx < d.col_labels.size(); ++cidx) {
                const gf::Vec& e = d.at(static_cast<int>(r), static_cast<int>(cidx));
                for (int b = 0; b < alg.dim(); ++b)
                    if (e[b] != 0 && (alg.basis()[b].src != d.col_labels[cidx] ||
                                      alg.basis()[b].tgt != d.row_labels[r]))
                        throw Error("complex: entry outside its hom block");
            }
    }
    for (size_t i = 0; i + 1 < c.diffs.size(); ++i)
        if (!compose(alg, c.diffs[i + 1], c.diffs[i]).is_zero())
            throw Error("complex: d^2 != 0");
}

ProjComplex direct_sum(const AlgebraTable& alg, const std::vector<ProjComplex>& parts) {
    if (parts.empty())
        throw Error("direct_sum: no parts");
    int lo = parts[0].min_degree, hi = parts[0].max_degree();
    for (const auto& p : parts) {
        lo = std::min(lo, p.min_degree);
        hi = std::max(hi, p.max_degree());
    }
    ProjComplex out;
    out.min_degree = lo;
    for (int d = lo; d <= hi; ++d) {
        std::vector<int> labels;
        for (const auto& p : parts)
            if (const auto* t = p.term(d))
                labels.insert(labels.end(), t->begin(), t->end());
        out.terms.push_back(std::move(labels));
    }
    for (int d = lo; d < hi; ++d) {
        AlgMat m = AlgMat::zero(alg, out.terms[d - lo + 1], out.terms[d - lo]);
        int row_base = 0, col_base = 0;
        for (const auto& p : parts) {
            const auto* src = p.term(d);
            const auto* dst = p.term(d + 1);
            if (const AlgMat* pd = p.diff(d))
                for (size_t r = 0; r < pd->row_labels.size(); ++r)
                    for (size_t c = 0; c < pd->col_labels.size(); ++c)
                        m.at(row_base + static_cast<int>(r), col_base + static_cast<int>(c)) =
                            pd->at(static_cast<int>(r), static_cast<int>(c));
            col_base += src ? static_cast<int>(src->size()) : 0;
            row_base += dst ? static_cast<int>(dst->size()) : 0;
        }
        out.diffs.push_back(std::move(m));
    }
    return out;
}

InjectivePresentation injective_presentation(const AlgebraTable& alg, int t) {
    if (!alg.socles_simple())
        throw Error("injective_presentation: algebra is not selfinjective "
                    "(socles are not simple)");
    if (alg.has_loop_at(t))
        throw Error("injective_presentation: Ext^1(S_t, S_t) != 0 at vertex " +
                    std::to_string(t));
    if (alg.nakayama().at(t) != t)
        throw Error("injective_presentation: E(S_t) is not P_t at vertex " + std::to_string(t));

    long long p = alg.modulus();
    int n = alg.dim();
    const gf::Vec& soc = alg.socle(t);

    std::vector<int> pt_cols;
    for (int b = 0; b < n; ++b)
        if (alg.basis()[b].tgt == t)
            pt_cols.push_back(b);

    std::vector<int> arrow_classes;
    for (const auto& a : alg.presentation().arrows)
        arrow_classes.push_back(alg.arrow_basis_index(a.id));

    std::map<int, int> nak_inv;
    for (const auto& [x, y] : alg.nakayama())
        nak_inv[y] = x;

    // soc(P_t / S_t), split by composition factor
    struct Summand {
        int factor;      // socle factor vertex of P_t/S_t
        int target;      // its injective envelope vertex
        gf::Vec witness; // lift in P_t
    };
    std::vector<Summand> summands;
    gf::RowSpace soc_span(p, n);
    soc_span.add(soc);
    for (int a : alg.vertices()) {
        std::vector<int> cols;
        for (int b : pt_cols)
            if (alg.basis()[b].src == a)
                cols.push_back(b);
        if (cols.empty())
            continue;
        gf::FpMat sys(p, 0, static_cast<int>(cols.size()));
        for (int ac : arrow_classes) {
            std::vector<gf::Vec> images;
            for (int c : cols)
                images.push_back(
                    soc_span.residue(alg.multiply(alg.unit_vec(c), alg.unit_vec(ac))));
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
        gf::RowSpace seen(p, n);
        seen.add(soc);
        for (const auto& sol : sys.nullspace()) {
            gf::Vec lift(n, 0);
            for (size_t ci = 0; ci < cols.size(); ++ci)
                lift[cols[ci]] = sol[ci];
            if (seen.add(lift))
                summands.push_back({a, nak_inv.at(a), std::move(lift)});
        }
    }
    if (summands.empty())
        throw Error("injective_presentation: P_t/S_t has empty socle");
    std::stable_sort(summands.begin(), summands.end(),
                     [](const Summand& a, const Summand& b) { return a.target < b.target; });

    // candidate components: radical maps P_t -> P_target detecting the witness
    std::vector<std::vector<int>> candidates;
    for (const auto& s : summands) {
        std::vector<int> c;
        for (int b : alg.hom_basis(t, s.target))
            if (!alg.basis()[b].rep_arrows.empty() &&
                !gf::is_zero(alg.multiply(alg.unit_vec(b), s.witness)))
                c.push_back(b);
        if (c.empty())
            throw Error("injective_presentation: no radical map detects a socle factor");
        candidates.push_back(std::move(c));
    }

    std::vector<int> pick(summands.size(), 0);
    auto attempt = [&]() -> bool {
        // kernel of the stacked map on P_t must be exactly the socle
        gf::FpMat sys(p, 0, static_cast<int>(pt_cols.size()));
        for (size_t i = 0; i < summands.size(); ++i) {
            gf::Vec fi = alg.unit_vec(candidates[i][pick[i]]);
            std::vector<gf::Vec> images;
            for (int c : pt_cols)
                images.push_back(alg.multiply(fi, alg.unit_vec(c)));
            for (int out = 0; out < n; ++out) {
                gf::Vec row(pt_cols.size(), 0);
                bool nonzero = false;
                for (size_t ci = 0; ci < pt_cols.size(); ++ci) {
                    row[ci] = images[ci][out];
                    nonzero |= row[ci] != 0;
                }
                if (nonzero)
                    sys.add_row(row);
            }
        }
        auto ker = sys.nullspace();
        if (ker.size() != 1)
            return false;
        gf::Vec lift(n, 0);
        for (size_t ci = 0; ci < pt_cols.size(); ++ci)
            lift[pt_cols[ci]] = ker[0][ci];
        if (!soc_span.contains(lift))
            return false;
        // essential: soc(E1) lies in the image of f
        gf::RowSpace image(p, static_cast<int>(summands.size()) * n);
        for (int c : pt_cols) {
            gf::Vec flat(summands.size() * n, 0);
            for (size_t i = 0; i < summands.size(); ++i) {
                gf::Vec img =
                    alg.multiply(alg.unit_vec(candidates[i][pick[i]]), alg.unit_vec(c));
                for (int b = 0; b < n; ++b)
                    flat[i * n + b] = img[b];
            }
            image.add(std::move(flat));
        }
        for (size_t i = 0; i < summands.size(); ++i) {
            gf::Vec flat(summands.size() * n, 0);
            const gf::Vec& s = alg.socle(summands[i].target);
            for (int b = 0; b < n; ++b)
                flat[i * n + b] = s[b];
            if (!image.contains(flat))
                return false;
        }
        return true;
    };
    while (!attempt()) {
        size_t k = summands.size();
        while (k > 0 && pick[k - 1] + 1 >= static_cast<int>(candidates[k - 1].size()))
            pick[--k] = 0;
        if (k == 0)
            throw Error("injective_presentation: no candidate map has socle kernel");
        ++pick[k - 1];
    }

    InjectivePresentation pres;
    pres.t = t;
    pres.e0 = t;
    for (const auto& s : summands)
        pres.e1.push_back(s.target);
    pres.f = AlgMat::zero(alg, pres.e1, {t});
    for (size_t i = 0; i < summands.size(); ++i)
        pres.f.at(static_cast<int>(i), 0) = alg.unit_vec(candidates[i][pick[i]]);
    return pres;
}

ProjComplex mapping_cone(const AlgebraTable& alg, const InjectivePresentation& pres) {
    ProjComplex c;
    c.min_degree = -1;
    c.terms = {{pres.e0}, pres.e1};
    c.diffs = {pres.f};
    validate_complex(alg, c);
    return c;
}

std::vector<ProjComplex> tilting_summands(const AlgebraTable& alg, int t) {
    std::vector<ProjComplex> out;
    InjectivePresentation pres = injective_presentation(alg, t);
    for (int v : alg.vertices()) {
        if (v == t)
            out.push_back(mapping_cone(alg, pres));
        else
            out.push_back(module_complex(v));
    }
    return out;
}

ProjComplex tilting_complex(const AlgebraTable& alg, int t) {
    return direct_sum(alg, tilting_summands(alg, t));
}

ChainMap compose_chain(const AlgebraTable& alg, const ChainMap& g, const ChainMap& f) {
    ChainMap out;
    out.j = f.j + g.j;
    for (const auto& [d, fd] : f.comps) {
        auto it = g.comps.find(d + f.j);
        if (it == g.comps.end())
            continue;
        AlgMat m = compose(alg, it->second, fd);
        if (!m.is_zero())
            out.comps[d] = std::move(m);
    }
    return out;
}

HomSpace::HomSpace(const AlgebraTable& alg, const ProjComplex& C, const ProjComplex& D, int j)
    : alg_(alg), C_(C), D_(D), j_(j), homotopy_span_(alg.modulus(), 0),
      chain_span_(alg.modulus(), 0) {
    long long p = alg.modulus();

    for (int d = C_.min_degree; d <= C_.max_degree(); ++d) {
        const auto* ct = C_.term(d);
        const auto* dt = D_.term(d + j_);
        if (!ct || !dt)
            continue;
        for (size_t r = 0; r < dt->size(); ++r)
            for (size_t c = 0; c < ct->size(); ++c) {
                Block b;
                b.degree = d;
                b.row = static_cast<int>(r);
                b.col = static_cast<int>(c);
                b.hom_ids = alg.hom_basis((*ct)[c], (*dt)[r]);
                b.offset = flat_size_;
                flat_size_ += static_cast<int>(b.hom_ids.size());
                blocks_.push_back(std::move(b));
            }
    }

    // chain-map equations: g^{d+1} dC^d - (-1)^j dD^{d+j} g^d = 0
    std::uint32_t sign = static_cast<std::uint32_t>(j_ % 2 == 0 ? 1 % p : (p - 1) % p);
    gf::FpMat eq(p, 0, flat_size_);
    for (int d = C_.min_degree - 1; d <= C_.max_degree(); ++d) {
        const auto* ct = C_.term(d);
        const auto* et = D_.term(d + j_ + 1);
        if (!ct || !et)
            continue;
        const AlgMat* dc = C_.diff(d);
        const AlgMat* dd = D_.diff(d + j_);
        for (size_t i = 0; i < et->size(); ++i)
            for (size_t k = 0; k < ct->size(); ++k) {
                const auto& out_ids = alg.hom_basis((*ct)[k], (*et)[i]);
                if (out_ids.empty())
                    continue;
                std::vector<gf::Vec> rows(out_ids.size(), gf::Vec(flat_size_, 0));
                bool any = false;
                if (dc)
                    for (const Block& b : blocks_) {
                        if (b.degree != d + 1 || b.row != static_cast<int>(i))
                            continue;
                        const gf::Vec& phi = dc->at(b.col, static_cast<int>(k));
                        if (gf::is_zero(phi))
                            continue;
                        for (size_t u = 0; u < b.hom_ids.size(); ++u) {
                            gf::Vec prod = alg.multiply(alg.unit_vec(b.hom_ids[u]), phi);
                            for (size_t o = 0; o < out_ids.size(); ++o)
                                if (prod[out_ids[o]] != 0) {
                                    rows[o][b.offset + u] = static_cast<std::uint32_t>(
                                        (rows[o][b.offset + u] + prod[out_ids[o]]) % p);
                                    any = true;
                                }
                        }
                    }
                if (dd)
                    for (const Block& b : blocks_) {
                        if (b.degree != d || b.col != static_cast<int>(k))
                            continue;
                        const gf::Vec& psi = dd->at(static_cast<int>(i), b.row);
                        if (gf::is_zero(psi))
                            continue;
                        for (size_t u = 0; u < b.hom_ids.size(); ++u) {
                            gf::Vec prod = alg.multiply(psi, alg.unit_vec(b.hom_ids[u]));
                            for (size_t o = 0; o < out_ids.size(); ++o)
                                if (prod[out_ids[o]] != 0) {
                                    long long neg =
                                        (p - static_cast<long long>(prod[out_ids[o]]) * sign % p) %
                                        p;
                                    rows[o][b.offset + u] = static_cast<std::uint32_t>(
                                        (rows[o][b.offset + u] + neg) % p);
                                    any = true;
                                }
                        }
                    }
                if (any)
                    for (auto& r : rows)
                        eq.add_row(r);
            }
    }

    chain_span_ = gf::RowSpace(p, flat_size_);
    if (flat_size_ > 0)
        for (const auto& z : eq.nullspace()) {
            chain_basis_.push_back(unflatten(z));
            chain_span_.add(z);
        }

    // null-homotopic subspace, spanned over unit homotopies h: C^d -> D^{d+j-1}
    homotopy_span_ = gf::RowSpace(p, flat_size_);
    for (int d = C_.min_degree; d <= C_.max_degree(); ++d) {
        const auto* ct = C_.term(d);
        const auto* ht = D_.term(d + j_ - 1);
        if (!ct || !ht)
            continue;
        for (size_t r = 0; r < ht->size(); ++r)
            for (size_t c = 0; c < ct->size(); ++c)
                for (int hb : alg.hom_basis((*ct)[c], (*ht)[r])) {
                    ChainMap img;
                    img.j = j_;
                    AlgMat h = AlgMat::zero(alg, *ht, *ct);
                    h.at(static_cast<int>(r), static_cast<int>(c)) = alg.unit_vec(hb);
                    // (-1)^j dD h lands in degree d
                    if (const AlgMat* dd = D_.diff(d + j_ - 1); dd && D_.term(d + j_)) {
                        AlgMat m = compose(alg, *dd, h);
                        if (j_ % 2 != 0)
                            for (auto& e : m.entries)
                                for (auto& x : e)
                                    x = static_cast<std::uint32_t>((p - x) % p);
                        if (!m.is_zero())
                            img.comps[d] = std::move(m);
                    }
                    // h dC lands in degree d-1
                    if (const AlgMat* dcp = C_.diff(d - 1); dcp && D_.term(d - 1 + j_)) {
                        AlgMat m = compose(alg, h, *dcp);
                        if (!m.is_zero()) {
                            auto it = img.comps.find(d - 1);
                            if (it == img.comps.end()) {
                                img.comps[d - 1] = std::move(m);
                            } else {
                                for (size_t e = 0; e < m.entries.size(); ++e)
                                    it->second.entries[e] =
                                        gf::add(it->second.entries[e], m.entries[e], p);
                            }
                        }
                    }
                    gf::Vec flat = flatten(img);
                    if (!gf::is_zero(flat)) {
                        if (!chain_span_.contains(flat))
                            throw Error("internal: homotopy image is not a chain map");
                        homotopy_span_.add(std::move(flat));
                    }
                }
    }
    dim_ = static_cast<int>(chain_basis_.size()) - homotopy_span_.dim();
}

ChainMap HomSpace::unflatten(const gf::Vec& v) const {
    ChainMap m;
    m.j = j_;
    for (const Block& b : blocks_) {
        bool nonzero = false;
        for (size_t u = 0; u < b.hom_ids.size(); ++u)
            if (v[b.offset + u] != 0)
                nonzero = true;
        if (!nonzero)
            continue;
        auto it = m.comps.find(b.degree);
        if (it == m.comps.end()) {
            AlgMat z = AlgMat::zero(alg_, *D_.term(b.degree + j_), *C_.term(b.degree));
            it = m.comps.emplace(b.degree, std::move(z)).first;
        }
        gf::Vec& entry = it->second.at(b.row, b.col);
        for (size_t u = 0; u < b.hom_ids.size(); ++u)
            entry[b.hom_ids[u]] = v[b.offset + u];
    }
    return m;
}

gf::Vec HomSpace::flatten(const ChainMap& m) const {
    if (m.j != j_)
        throw Error("flatten: degree mismatch");
    gf::Vec out(flat_size_, 0);
    for (const Block& b : blocks_) {
        auto it = m.comps.find(b.degree);
        if (it == m.comps.end())
            continue;
        const gf::Vec& entry = it->second.at(b.row, b.col);
        gf::Vec rest = entry;
        for (size_t u = 0; u < b.hom_ids.size(); ++u) {
            out[b.offset + u] = entry[b.hom_ids[u]];
            rest[b.hom_ids[u]] = 0;
        }
        if (!gf::is_zero(rest))
            throw Error("flatten: entry outside its hom block");
    }
    return out;
}

bool HomSpace::is_chain_map(const ChainMap& m) const {
    return chain_span_.contains(flatten(m));
}

bool HomSpace::null_homotopic(const ChainMap& m) const {
    return homotopy_span_.contains(flatten(m));
}

ChainMap HomSpace::identity() const {
    if (j_ != 0)
        throw Error("identity: only defined for j = 0");
    ChainMap id;
    id.j = 0;
    for (int d = C_.min_degree; d <= C_.max_degree(); ++d) {
        const auto* ct = C_.term(d);
        const auto* dt = D_.term(d);
        if (!ct || !dt || *ct != *dt)
            throw Error("identity: complexes differ");
        AlgMat m = AlgMat::zero(alg_, *dt, *ct);
        for (size_t i = 0; i < ct->size(); ++i)
            m.at(static_cast<int>(i), static_cast<int>(i)) =
                alg_.unit_vec(alg_.idempotent_index((*ct)[i]));
        id.comps[d] = std::move(m);
    }
    return id;
}

int hom_dim(const AlgebraTable& alg, const ProjComplex& C, const ProjComplex& D, int j) {
    return HomSpace(alg, C, D, j).dim();
}

} // namespace brauer
