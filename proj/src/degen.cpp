#include "redvar/degen.hpp"

#include <algorithm>
#include <set>

#include "redvar/error.hpp"
#include "redvar/linalg.hpp"

namespace redvar {

namespace {

QVec compose(const QVec& l, const IMat& w) {
    // (l o w)(x) = l(w x)
    QVec out(l.size(), 0);
    for (std::size_t j = 0; j < l.size(); ++j)
        for (std::size_t i = 0; i < l.size(); ++i) out[j] += l[i] * Rat(w[i][j]);
    return out;
}

// Domains together with the index of a piece that is maximal on each.
std::vector<std::pair<Cone, std::size_t>> domains_with_pieces(const HeightFunction& h) {
    std::size_t n = h.sigma.ambient();
    std::vector<std::pair<Cone, std::size_t>> out;
    std::set<Cone> seen;
    for (std::size_t i = 0; i < h.pieces.size(); ++i) {
        IMat ineq;
        for (std::size_t j = 0; j < h.pieces.size(); ++j) {
            IVec d = primitive(sub(h.pieces[i], h.pieces[j]));
            if (!is_zero(d)) ineq.push_back(d);
        }
        Cone D = intersect(h.sigma, Cone::from_inequalities(n, ineq));
        if (D.dim() != h.sigma.dim() || !seen.insert(D).second) continue;
        out.push_back({D, i});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool agree_on(const Cone& D, const QVec& a, const QVec& b) {
    for (const auto& g : D.generators())
        if (dot(g, a) != dot(g, b)) return false;
    return true;
}

Rat floor_rat(const Rat& q) { return Rat(floor_int(q)); }

}  // namespace

Rat HeightFunction::operator()(const QVec& x) const {
    if (pieces.empty()) throw Error(ErrorCode::BadInput, "height function has no pieces");
    Rat best = dot(pieces[0], x);
    for (const auto& p : pieces) best = std::max(best, dot(p, x));
    return best;
}

HeightReport validate_height(const GroupData& G, const HeightFunction& h) {
    std::size_t n = G.rank();
    if (h.pieces.empty()) return {false, "no pieces", std::nullopt};
    if (h.sigma.ambient() != n) return {false, "cone has the wrong rank", std::nullopt};
    for (const auto& p : h.pieces)
        if (p.size() != n) return {false, "piece has the wrong length", std::nullopt};
    auto dom = domains_with_pieces(h);
    for (auto w : G.stabilizer(h.sigma)) {
        HeightFunction hw{h.sigma, {}};
        for (const auto& p : h.pieces) hw.pieces.push_back(compose(p, G.weyl().element(w)));
        for (const auto& [D, i] : dom)
            for (const auto& [E, j] : domains_with_pieces(hw)) {
                Cone I = intersect(D, E);
                if (I.dim() != h.sigma.dim()) continue;
                if (!agree_on(I, h.pieces[i], hw.pieces[j]))
                    return {false, "not invariant under the stabilizer of sigma", w};
            }
    }
    return {};
}

std::vector<Cone> linearity_domains(const HeightFunction& h) {
    std::vector<Cone> out;
    for (const auto& [D, i] : domains_with_pieces(h)) out.push_back(D);
    return out;
}

WComplex subdivision(const GroupData& G, const HeightFunction& h) { return complex_from_cones(G, linearity_domains(h)); }

RootDatum extended_datum(const RootDatum& rd) {
    IMat roots, coroots;
    for (auto r : rd.simple_roots()) {
        r.emplace_back(0);
        roots.push_back(r);
    }
    for (auto c : rd.simple_coroots()) {
        c.emplace_back(0);
        coroots.push_back(c);
    }
    return build_root_datum(rd.rank() + 1, roots, coroots);
}

Cone lifted_cone(const GroupData& G, const HeightFunction& h) {
    std::size_t n = G.rank();
    std::vector<QVec> gens;
    auto lift = [&](const IVec& x) {
        QVec v = to_q(x);
        v.push_back(h(x));
        gens.push_back(v);
    };
    for (const auto& D : linearity_domains(h)) {
        for (const auto& r : D.rays()) lift(r);
        for (const auto& l : D.lineality()) {
            lift(l);
            lift(neg(l));
        }
    }
    QVec up(n + 1, 0);
    up[n] = 1;
    gens.push_back(up);
    Cone lifted = Cone::from_generators(n + 1, gens);
    GroupData ext(extended_datum(G.rd()), G.caps());
    if (!is_w_admissible(ext, lifted, Exec::Serial).admissible)
        throw Error(ErrorCode::NotAdmissibleLift, "lifted cone is not admissible for G x Gm");
    return lifted;
}

ReducedReport special_fiber_reduced(const GroupData& G, const HeightFunction& h) {
    ReducedReport rep;
    std::set<Weight, std::greater<>> hb;
    for (const auto& D : linearity_domains(h)) {
        Cone C = intersect(D, G.chamber());
        for (const auto& x : hilbert_basis(C, {}, G.caps().hilbert_dim)) hb.insert(x);
    }
    for (const auto& x : hb)
        if (h(x).get_den() != 1) {
            rep.reduced = false;
            rep.witness = x;
            break;
        }
    return rep;
}

std::optional<NilpotentWitness> nilpotent_witness(const GroupData& G, const HeightFunction& h) {
    auto rep = special_fiber_reduced(G, h);
    if (rep.reduced) return std::nullopt;
    Rat v = h(*rep.witness);
    Rat f = floor_rat(v);
    for (Int m = 2;; ++m)
        if (floor_rat(Rat(m) * v) > Rat(m) * f) return NilpotentWitness{*rep.witness, m};
}

SpecialFiber special_fiber(GroupPtr G, const HeightFunction& h, const IVec& gamma, const Int& N) {
    auto rep = validate_height(*G, h);
    if (!rep.valid) throw Error(ErrorCode::BadInput, "invalid height function: " + rep.message);
    SpecialFiber sf{subdivision(*G, h), make_context(G, h.sigma, gamma, N), h};
    return sf;
}

WeightMap fiber_product(const SpecialFiber& sf, const WeightMap& x, const WeightMap& y) {
    const CharContext& ctx = *sf.ctx;
    WeightMap out;
    for (const auto& [l, a] : x)
        for (const auto& [m, b] : y) {
            Rat fl = floor_rat(sf.h(l)) + floor_rat(sf.h(m));
            for (const auto& [nu, c] : product_support_levelK(ctx.group->rd(), l, m, ctx.K, ctx.group->caps()))
                if (degree(ctx, nu) <= ctx.N && floor_rat(sf.h(nu)) == fl) out[nu] += a * b * c;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

bool monomial_product_nonzero(const HeightFunction& h, const Weight& l, const Weight& m) {
    return floor_rat(h(add(l, m))) == floor_rat(h(l)) + floor_rat(h(m));
}

std::optional<Int> monomial_nilpotency(const HeightFunction& h, const Weight& lambda, long max_power) {
    Weight acc = lambda;
    for (long k = 2; k <= max_power; ++k) {
        if (!monomial_product_nonzero(h, acc, lambda)) return Int(k);
        acc = add(acc, lambda);
    }
    return std::nullopt;
}

HeightReport validate_height_system(const GroupData& G, const HeightSystem& hs) {
    const WComplex& wc = hs.complex;
    std::size_t n = G.rank();
    for (const auto& [c, h] : hs.heights) {
        if (c >= wc.size()) return {false, "height attached to an unknown cell", std::nullopt};
        if (h.sigma != wc.cells[c].cone) return {false, wc.cells[c].id + ": height domain differs from the cell", std::nullopt};
        auto r = validate_height(G, h);
        if (!r.valid) return {false, wc.cells[c].id + ": " + r.message, r.witness};
    }
    // declared gamma, oriented as h_{cone1} - h_{cone2}
    auto declared = [&](std::size_t t, std::size_t a, std::size_t b, std::size_t d) -> std::optional<IVec> {
        for (const auto& g : hs.gamma) {
            if (g.face != t) continue;
            if (g.cone1 == a && g.cone2 == b) return g.values;
            if (g.cone1 == b && g.cone2 == a) return neg(g.values);
        }
        return IVec(d, 0);
    };
    std::vector<std::size_t> cells;
    for (const auto& [c, h] : hs.heights) cells.push_back(c);
    for (const auto& g : hs.gamma)
        if (g.face >= wc.size() || !hs.heights.count(g.cone1) || !hs.heights.count(g.cone2) ||
            !wc.is_face_of(g.face, g.cone1) || !wc.is_face_of(g.face, g.cone2))
            return {false, "gamma entry does not name a shared face of two height domains", std::nullopt};
    for (std::size_t ia = 0; ia < cells.size(); ++ia)
        for (std::size_t ib = ia + 1; ib < cells.size(); ++ib) {
            std::size_t a = cells[ia], b = cells[ib];
            for (std::size_t t = 0; t < wc.size(); ++t) {
                if (!wc.is_face_of(t, a) || !wc.is_face_of(t, b)) continue;
                const Cone& tau = wc.cells[t].cone;
                std::string where = wc.cells[t].id + " in " + wc.cells[a].id + ", " + wc.cells[b].id;
                IMat B = tau.dim() ? saturation_basis(tau.span_basis(), n) : IMat{};
                const HeightFunction& ha = hs.heights.at(a);
                const HeightFunction& hb = hs.heights.at(b);
                std::optional<IVec> diff;
                bool linear = true;
                for (const auto& [D, i] : domains_with_pieces({tau, ha.pieces}))
                    for (const auto& [E, j] : domains_with_pieces({tau, hb.pieces})) {
                        Cone I = intersect(D, E);
                        if (I.dim() != tau.dim()) continue;
                        QVec delta = sub(ha.pieces[i], hb.pieces[j]);
                        IVec vals;
                        for (const auto& v : B) {
                            Rat x = dot(v, delta);
                            if (x.get_den() != 1) linear = false;
                            vals.push_back(x.get_num());
                        }
                        // compare as functions on lin tau
                        if (diff && *diff != vals) linear = false;
                        diff = vals;
                    }
                if (!linear || !diff) return {false, "difference of heights is not linear and integral on " + where, std::nullopt};
                IVec g = *declared(t, a, b, B.size());
                if (g.size() != B.size() && !is_zero(g))
                    return {false, "gamma has the wrong length on " + where, std::nullopt};
                if (g.size() != B.size()) g.assign(B.size(), 0);
                if (g != *diff) return {false, "declared gamma differs from the height difference on " + where, std::nullopt};
                QVec gq(n, 0);
                if (!B.empty()) {
                    // covector on lin tau with the declared values, checked against the relations
                    for (const auto& r : cell_relation_generators(G, wc, t)) {
                        auto co = lattice_coords(B, r);
                        Int s = 0;
                        for (std::size_t k = 0; k < B.size(); ++k) s += (*co)[k] * g[k];
                        if (s != 0) return {false, "gamma does not vanish on ZK of " + wc.cells[t].id, std::nullopt};
                    }
                }
            }
        }
    // cocycle identity on triples
    for (std::size_t t = 0; t < wc.size(); ++t)
        for (auto a : cells)
            for (auto b : cells)
                for (auto c : cells) {
                    if (a == b || b == c || a == c) continue;
                    if (!wc.is_face_of(t, a) || !wc.is_face_of(t, b) || !wc.is_face_of(t, c)) continue;
                    std::size_t d = wc.cells[t].cone.dim() ? saturation_basis(wc.cells[t].cone.span_basis(), n).size() : 0;
                    IVec ab = *declared(t, a, b, d), bc = *declared(t, b, c, d), ac = *declared(t, a, c, d);
                    if (ab.size() == d && bc.size() == d && ac.size() == d && add(ab, bc) != ac)
                        return {false, "gamma fails the cocycle identity at " + wc.cells[t].id, std::nullopt};
                }
    return {};
}

}  // namespace redvar
