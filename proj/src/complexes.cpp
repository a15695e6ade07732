#include "redvar/complexes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "redvar/error.hpp"

namespace redvar {

namespace {

std::size_t coxeter_order(const RootDatum& rd, std::size_t i, std::size_t j) {
    Int p = rd.cartan()[i][j] * rd.cartan()[j][i];
    if (p == 0) return 2;
    if (p == 1) return 3;
    if (p == 2) return 4;
    return 6;
}

IMat lattice_of(const Cone& c, std::size_t n) {
    return c.dim() ? saturation_basis(c.span_basis(), n) : IMat{};
}

std::vector<std::size_t> act_chain(const WComplex& wc, const WeylGroup& W, std::size_t w,
                                   const std::vector<std::size_t>& ch) {
    std::vector<std::size_t> out;
    for (auto c : ch) out.push_back(wc.act(W, w, c));
    return out;
}

// Cells strictly containing c, in index order.
std::vector<std::size_t> cofaces(const WComplex& wc, std::size_t c) {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < wc.size(); ++s)
        if (s != c && wc.is_face_of(c, s)) out.push_back(s);
    return out;
}

struct ChainIndex {
    std::map<std::vector<std::size_t>, std::size_t> rep_of;   // any chain -> rep slot
    std::map<std::vector<std::size_t>, std::size_t> to_rep;   // any chain -> w with w.chain = rep
};

void enumerate_chains(const WComplex& wc, const WeylGroup& W, std::size_t len, ChainTerm& term,
                      ChainIndex& idx) {
    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == len) {
            all.push_back(cur);
            return;
        }
        if (cur.empty()) {
            for (std::size_t c = 0; c < wc.size(); ++c) {
                cur.push_back(c);
                self(self);
                cur.pop_back();
            }
        } else {
            for (auto s : cofaces(wc, cur.back())) {
                cur.push_back(s);
                self(self);
                cur.pop_back();
            }
        }
    };
    rec(rec);
    std::sort(all.begin(), all.end());
    for (const auto& ch : all) {
        if (idx.rep_of.count(ch)) continue;
        std::size_t slot = term.chains.size();
        term.chains.push_back(ch);
        for (std::size_t w = 0; w < W.size(); ++w) {
            auto img = act_chain(wc, W, w, ch);
            if (idx.rep_of.count(img)) continue;
            idx.rep_of[img] = slot;
        }
    }
    // element carrying each chain back to its representative
    for (const auto& ch : all) {
        const auto& rep = term.chains[idx.rep_of.at(ch)];
        for (std::size_t w = 0; w < W.size(); ++w)
            if (act_chain(wc, W, w, ch) == rep) {
                idx.to_rep[ch] = w;
                break;
            }
    }
}

IMat cell_relations(const GroupData& G, const WComplex& wc, std::size_t c, const IMat& L) {
    const RootDatum& rd = G.rd();
    const WeylGroup& W = G.weyl();
    IMat rel;
    const Cone& rho = wc.cells[c].cone;
    std::size_t u = G.canonical_translate(rho);
    if (u < W.size()) {
        Cone t = apply_matrix(W.element(u), rho);
        IMat uinv;
        for (std::size_t v = 0; v < W.size(); ++v)
            if (mat_mul(W.element(v), W.element(u)) == identity(rd.rank())) uinv = W.element(v);
        for (auto i : root_set_of(G, t)) rel.push_back(mat_vec(uinv, rd.simple_roots()[i]));
    }
    for (std::size_t w = 0; w < W.size(); ++w) {
        if (wc.act(W, w, c) != c) continue;
        for (const auto& x : L) {
            IVec d = sub(x, mat_vec(W.element(w), x));
            if (!is_zero(d)) rel.push_back(d);
        }
    }
    return rel;
}

IVec value_of(const IMat& values, const IVec& x, std::size_t s) {
    IVec out(s, 0);
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t k = 0; k < s; ++k) out[k] += x[j] * values[j][k];
    return out;
}

}  // namespace

IVec ValueGroup::reduce(IVec v) const {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (orders[i] != 0) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), v[i].get_mpz_t(), orders[i].get_mpz_t());
            v[i] = r;
        }
    return v;
}

bool ValueGroup::is_identity(const IVec& v) const { return is_zero(reduce(v)); }

ValidationReport validate_complex(const GroupData& G, const WComplex& wc) {
    const RootDatum& rd = G.rd();
    const WeylGroup& W = G.weyl();
    std::size_t n = rd.rank();
    auto fail = [](int ax, std::string msg) { return ValidationReport{false, ax, std::move(msg)}; };

    for (const auto& cell : wc.cells)
        if (cell.cone.ambient() != n) return fail(1, cell.id + ": realization has wrong ambient dimension");

    for (std::size_t c = 0; c < wc.size(); ++c) {
        const auto& cell = wc.cells[c];
        std::vector<Cone> declared;
        for (auto f : cell.faces) {
            if (f >= wc.size() || f == c) return fail(2, cell.id + ": bad face reference");
            if (!is_face(wc.cells[f].cone, cell.cone) || wc.cells[f].cone == cell.cone)
                return fail(2, cell.id + ": declared face " + wc.cells[f].id + " is not a proper face");
            for (auto g : wc.cells[f].faces)
                if (!wc.is_face_of(g, c)) return fail(2, cell.id + ": face relation not transitive");
            declared.push_back(wc.cells[f].cone);
        }
        std::sort(declared.begin(), declared.end());
        std::vector<Cone> actual;
        for (const auto& f : faces(cell.cone))
            if (f != cell.cone) actual.push_back(f);
        if (declared != actual) return fail(2, cell.id + ": faces of the realization are not matched by cells");
    }

    for (std::size_t a = 0; a < wc.size(); ++a)
        for (std::size_t b = a + 1; b < wc.size(); ++b) {
            Cone m = intersect(wc.cells[a].cone, wc.cells[b].cone);
            if (!is_face(m, wc.cells[a].cone) || !is_face(m, wc.cells[b].cone))
                return fail(3, wc.cells[a].id + " and " + wc.cells[b].id + " overlap outside a common face");
        }

    if (wc.action.size() != rd.semisimple_rank()) return fail(4, "action must list every simple reflection");
    for (std::size_t i = 0; i < wc.action.size(); ++i) {
        if (wc.action[i].size() != wc.size()) return fail(4, "action row has wrong length");
        IMat s = rd.reflection_matrix(i);
        for (std::size_t c = 0; c < wc.size(); ++c) {
            std::size_t d = wc.action[i][c];
            if (d >= wc.size()) return fail(4, "action maps outside the complex");
            if (wc.cells[d].cone != apply_matrix(s, wc.cells[c].cone))
                return fail(4, wc.cells[c].id + ": realization is not equivariant");
            for (auto f : wc.cells[c].faces)
                if (!wc.is_face_of(wc.action[i][f], d) || wc.action[i][f] == d)
                    return fail(4, wc.cells[c].id + ": action does not preserve faces");
        }
    }
    for (std::size_t i = 0; i < wc.action.size(); ++i)
        for (std::size_t j = 0; j < wc.action.size(); ++j) {
            std::size_t m = i == j ? 1 : coxeter_order(rd, i, j);
            for (std::size_t c = 0; c < wc.size(); ++c) {
                std::size_t x = c;
                for (std::size_t k = 0; k < m; ++k) x = wc.action[i][wc.action[j][x]];
                if (x != c) return fail(4, "action violates a Coxeter relation");
            }
        }
    for (std::size_t c = 0; c < wc.size(); ++c) {
        std::set<std::size_t> orbit;
        for (std::size_t w = 0; w < W.size(); ++w) orbit.insert(wc.act(W, w, c));
        for (auto a : orbit)
            for (auto b : orbit) {
                if (a >= b) continue;
                Cone m = intersect(wc.cells[a].cone, wc.cells[b].cone);
                bool ok = false;
                for (std::size_t f = 0; f < wc.size() && !ok; ++f)
                    if (wc.is_face_of(f, a) && wc.is_face_of(f, b) && wc.cells[f].cone == m) ok = true;
                if (!ok)
                    return fail(4, "reference map not injective on the orbit of " + wc.cells[c].id);
            }
    }
    return {};
}

bool rho_injective(const WComplex& wc) {
    for (std::size_t a = 0; a < wc.size(); ++a)
        for (std::size_t b = a + 1; b < wc.size(); ++b) {
            Cone m = intersect(wc.cells[a].cone, wc.cells[b].cone);
            bool ok = false;
            for (std::size_t f = 0; f < wc.size() && !ok; ++f)
                if (wc.is_face_of(f, a) && wc.is_face_of(f, b) && wc.cells[f].cone == m) ok = true;
            if (!ok) return false;
        }
    return true;
}

std::vector<std::size_t> irreducible_components(const GroupData& G, const WComplex& wc) {
    std::vector<std::size_t> out;
    auto maxi = wc.maximal_cells();
    for (const auto& orb : wc.orbits())
        for (auto c : orb)
            if (std::find(maxi.begin(), maxi.end(), c) != maxi.end() && G.meets_chamber(wc.cells[c].cone)) {
                out.push_back(c);
                break;
            }
    return out;
}

std::vector<CellClass> orbit_classes(const GroupData& G, const WComplex& wc) {
    std::vector<CellClass> out;
    std::size_t n = G.rank();
    for (const auto& orb : wc.orbits()) {
        CellClass cc;
        cc.members = orb;
        cc.rep = orb.front();
        for (auto c : orb)
            if (G.meets_chamber(wc.cells[c].cone)) {
                cc.rep = c;
                break;
            }
        const Cone& rho = wc.cells[cc.rep].cone;
        cc.dim = rho.dim();
        IMat L = lattice_of(rho, n);
        cc.characters = quotient_group(L, cell_relations(G, wc, cc.rep, L));
        if (is_w_admissible(G, rho, Exec::Serial).admissible)
            cc.inv = isotropy_invariant(G, AdmissibleCone::make(G, rho));
        out.push_back(std::move(cc));
    }
    return out;
}

AutChainComplex aut_chain_complex(const GroupData& G, const WComplex& wc) {
    const WeylGroup& W = G.weyl();
    std::size_t n = G.rank();
    AutChainComplex cx;
    std::vector<IMat> L(wc.size());
    for (std::size_t c = 0; c < wc.size(); ++c) {
        L[c] = lattice_of(wc.cells[c].cone, n);
        cx.cell_relations.push_back(cell_relations(G, wc, c, L[c]));
    }
    for (std::size_t s = 0; s < wc.size(); ++s) {
        IMat Rs = hnf(cx.cell_relations[s], n);
        for (auto t : wc.cells[s].faces)
            for (const auto& r : cx.cell_relations[t])
                if (!in_lattice(Rs, r))
                    throw Error(ErrorCode::IllDefinedRestriction,
                                "relations of " + wc.cells[t].id + " do not map into those of " + wc.cells[s].id);
    }

    std::vector<ChainIndex> idx(3);
    cx.terms.resize(3);
    for (std::size_t d = 0; d < 3; ++d) {
        ChainTerm& term = cx.terms[d];
        enumerate_chains(wc, W, d + 1, term, idx[d]);
        for (const auto& ch : term.chains) {
            term.offsets.push_back(term.rank);
            term.bases.push_back(L[ch.front()]);
            term.rank += L[ch.front()].size();
        }
        for (std::size_t k = 0; k < term.chains.size(); ++k) {
            const IMat& B = term.bases[k];
            for (const auto& r : cx.cell_relations[term.chains[k].front()]) {
                IVec row(term.rank, 0);
                auto co = lattice_coords(B, r);
                for (std::size_t j = 0; j < B.size(); ++j) row[term.offsets[k] + j] = (*co)[j];
                term.relations.push_back(row);
            }
        }
        term.group = quotient_group(identity(term.rank), term.relations);
    }

    cx.boundary.resize(3);
    for (std::size_t d = 1; d < 3; ++d) {
        const ChainTerm& src = cx.terms[d];
        const ChainTerm& dst = cx.terms[d - 1];
        IMat D;
        for (std::size_t k = 0; k < src.chains.size(); ++k) {
            const auto& ch = src.chains[k];
            for (const auto& b : src.bases[k]) {
                IVec row(dst.rank, 0);
                for (std::size_t i = 0; i <= d; ++i) {
                    std::vector<std::size_t> face = ch;
                    face.erase(face.begin() + static_cast<long>(i));
                    std::size_t slot = idx[d - 1].rep_of.at(face);
                    IVec v = mat_vec(W.element(idx[d - 1].to_rep.at(face)), b);
                    auto co = lattice_coords(dst.bases[slot], v);
                    if (!co) throw Error(ErrorCode::IllDefinedRestriction, "character does not restrict");
                    int sign = i % 2 ? -1 : 1;
                    for (std::size_t j = 0; j < co->size(); ++j) row[dst.offsets[slot] + j] += sign * (*co)[j];
                }
                D.push_back(row);
            }
        }
        cx.boundary[d] = D;
    }
    for (const auto& r1 : cx.boundary[2]) {
        IVec z(cx.terms[0].rank, 0);
        for (std::size_t j = 0; j < r1.size(); ++j)
            if (r1[j] != 0)
                for (std::size_t k = 0; k < z.size(); ++k) z[k] += r1[j] * cx.boundary[1][j][k];
        if (!is_zero(z)) throw Error(ErrorCode::IllDefinedRestriction, "boundary maps do not compose to zero");
    }
    return cx;
}

IMat cell_relation_generators(const GroupData& G, const WComplex& wc, std::size_t c) {
    return cell_relations(G, wc, c, lattice_of(wc.cells[c].cone, G.rank()));
}

Cohomology cohomology(const AutChainComplex& cx) {
    Cohomology h;
    const ChainTerm& t0 = cx.terms[0];
    const ChainTerm& t1 = cx.terms[1];
    IMat sub0 = cx.boundary[1];
    sub0.insert(sub0.end(), t0.relations.begin(), t0.relations.end());
    h.H0 = quotient_group(identity(t0.rank), sub0);

    // P = {x : x D1 in R0}
    std::size_t m1 = t1.rank, r0 = t0.relations.size();
    IMat A(t0.rank, IVec(m1 + r0, 0));
    for (std::size_t i = 0; i < m1; ++i)
        for (std::size_t k = 0; k < t0.rank; ++k) A[k][i] = cx.boundary[1][i][k];
    for (std::size_t i = 0; i < r0; ++i)
        for (std::size_t k = 0; k < t0.rank; ++k) A[k][m1 + i] = -t0.relations[i][k];
    IMat ker = integer_kernel(A, m1 + r0);
    IMat P;
    for (const auto& z : ker) P.emplace_back(z.begin(), z.begin() + static_cast<long>(m1));
    h.cycles = hnf(P, m1);
    IMat sub1 = cx.boundary[2];
    sub1.insert(sub1.end(), t1.relations.begin(), t1.relations.end());
    h.H1 = quotient_group(h.cycles, sub1);
    return h;
}

Cohomology cohomology(const GroupData& G, const WComplex& wc) { return cohomology(aut_chain_complex(G, wc)); }

namespace {

// Value of t on every generator of F_1.
IMat cochain_values(const GroupData& G, const WComplex& wc, const AutChainComplex& cx, const Cocycle& t) {
    const WeylGroup& W = G.weyl();
    std::size_t n = G.rank(), s = t.vg.symbols.size();
    if (t.vg.orders.size() != s) throw Error(ErrorCode::BadInput, "value group orders do not match symbols");
    const ChainTerm& t1 = cx.terms[1];
    std::vector<std::optional<IMat>> onrep(t1.chains.size());
    for (const auto& e : t.entries) {
        if (e.values.size() != n) throw Error(ErrorCode::BadInput, "cocycle entry must give one value per coordinate");
        for (const auto& r : e.values)
            if (r.size() != s) throw Error(ErrorCode::BadInput, "cocycle value has wrong length");
        std::vector<std::size_t> ch{e.face, e.cone};
        std::size_t slot = t1.chains.size();
        for (std::size_t k = 0; k < t1.chains.size(); ++k)
            for (std::size_t w = 0; w < W.size() && slot == t1.chains.size(); ++w)
                if (act_chain(wc, W, w, t1.chains[k]) == ch) {
                    slot = k;
                    // t_rep(m) = t_entry(w m)
                    IMat M = W.element(w);
                    IMat vals(n, IVec(s, 0));
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t i = 0; i < n; ++i)
                            for (std::size_t k2 = 0; k2 < s; ++k2) vals[j][k2] += M[i][j] * e.values[i][k2];
                    if (onrep[k]) {
                        for (const auto& b : t1.bases[k])
                            if (!t.vg.is_identity(sub(value_of(*onrep[k], b, s), value_of(vals, b, s))))
                                throw Error(ErrorCode::BadInput, "conflicting cocycle entries for one incidence class");
                    } else {
                        onrep[k] = vals;
                    }
                }
        if (slot == t1.chains.size()) throw Error(ErrorCode::BadInput, "cocycle entry is not a face incidence");
    }
    IMat T;
    for (std::size_t k = 0; k < t1.chains.size(); ++k)
        for (const auto& b : t1.bases[k]) T.push_back(onrep[k] ? value_of(*onrep[k], b, s) : IVec(s, 0));
    return T;
}

IVec apply_row(const IVec& x, const IMat& T, std::size_t s) {
    IVec out(s, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            for (std::size_t k = 0; k < s; ++k) out[k] += x[i] * T[i][k];
    return out;
}

}  // namespace

std::vector<IVec> cocycle_class(const GroupData& G, const WComplex& wc, const Cocycle& t) {
    AutChainComplex cx = aut_chain_complex(G, wc);
    IMat T = cochain_values(G, wc, cx, t);
    std::size_t s = t.vg.symbols.size();
    for (const auto& r : cx.terms[1].relations)
        if (!t.vg.is_identity(apply_row(r, T, s)))
            throw Error(ErrorCode::NotACocycle, "entry does not vanish on the relations of its face");
    for (const auto& r : cx.boundary[2])
        if (!t.vg.is_identity(apply_row(r, T, s)))
            throw Error(ErrorCode::NotACocycle, "cocycle condition fails on a chain of three cones");
    Cohomology h = cohomology(cx);
    std::vector<IVec> out;
    for (const auto& p : h.cycles) out.push_back(t.vg.reduce(apply_row(p, T, s)));
    return out;
}

bool is_coboundary(const GroupData& G, const WComplex& wc, const Cocycle& t) {
    for (const auto& v : cocycle_class(G, wc, t))
        if (!is_zero(v)) return false;
    return true;
}

bool semigroup_admissible(const GroupData& G, const WComplex& wc, const Cocycle& t) {
    return rho_injective(wc) && is_coboundary(G, wc, t);
}

Cocycle coboundary(const WComplex& wc, const ValueGroup& vg, const std::vector<IMat>& s) {
    Cocycle t;
    t.vg = vg;
    for (std::size_t c = 0; c < wc.size(); ++c)
        for (auto f : wc.cells[c].faces) {
            IMat v = s[c];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = sub(s[c][j], s[f][j]);
            t.entries.push_back({f, c, v});
        }
    return t;
}

}  // namespace redvar
