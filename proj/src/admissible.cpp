#include "redvar/admissible.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "redvar/error.hpp"

namespace redvar {

std::optional<std::size_t> overlapping_translate(const GroupData& G, const Cone& sigma, Exec exec) {
    const WeylGroup& W = G.weyl();
    long n = static_cast<long>(W.size());
    if (exec == Exec::Serial) {
        for (long w = 0; w < n; ++w) {
            Cone t = apply_matrix(W.element(w), sigma);
            if (t != sigma && interiors_intersect(sigma, t)) return static_cast<std::size_t>(w);
        }
        return std::nullopt;
    }
    std::vector<char> bad(W.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (long w = 0; w < n; ++w) {
        Cone t = apply_matrix(W.element(w), sigma);
        bad[w] = (t != sigma && interiors_intersect(sigma, t)) ? 1 : 0;
    }
    for (std::size_t w = 0; w < bad.size(); ++w)
        if (bad[w]) return w;
    return std::nullopt;
}

AdmissibilityResult is_w_admissible(const GroupData& G, const Cone& sigma, Exec exec) {
    AdmissibilityResult r;
    if (sigma.ambient() != G.rank()) throw Error(ErrorCode::RankMismatch, "cone ambient differs from rank");
    if (!G.meets_chamber(sigma)) {
        r.failed_condition = 1;
        r.reason = "relative interior misses the dominant chamber";
        return r;
    }
    if (auto w = overlapping_translate(G, sigma, exec)) {
        r.failed_condition = 2;
        r.witness = *w;
        r.reason = "a distinct W-translate has overlapping relative interior";
        return r;
    }
    r.admissible = true;
    return r;
}

RootSet root_set_of(const GroupData& G, const Cone& sigma) {
    const RootDatum& rd = G.rd();
    RootSet K;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
        bool nonzero = false;
        for (const auto& g : sigma.generators())
            if (rd.pairing(g, i) != 0) nonzero = true;
        if (!nonzero) continue;
        Cone wall = Cone::from_inequalities(rd.rank(), {}, {rd.simple_coroots()[i]});
        Cone m = intersect(sigma, wall);
        if (sigma.contains_in_relint(m.relint_point())) K.push_back(i);
    }
    return K;
}

std::pair<Cone, RootSet> cone_invariants(const GroupData& G, const Cone& sigma) {
    if (!is_w_admissible(G, sigma).admissible) throw Error(ErrorCode::NotAdmissible, "cone is not W-admissible");
    return {intersect(sigma, G.chamber()), root_set_of(G, sigma)};
}

PairCheck check_pair(const GroupData& G, const Cone& C, const RootSet& K) {
    const RootDatum& rd = G.rd();
    PairCheck pc;
    pc.in_chamber = G.chamber().contains(C);
    pc.cond1 = true;
    for (auto i : K)
        if (!C.in_span(to_q(rd.simple_roots()[i]))) pc.cond1 = false;
    pc.cond2 = true;
    IMat span = C.span_basis();
    std::set<IVec> walls;
    for (const auto& cv : rd.simple_coroots()) {
        IVec p = primitive(project(span, to_q(cv)));
        if (!is_zero(p)) walls.insert(p);
    }
    for (const auto& u : C.facets()) {
        if (walls.count(u)) continue;
        for (auto i : K)
            if (dot(u, rd.simple_roots()[i]) > 0) pc.cond2 = false;
    }
    return pc;
}

Cone reconstruct_sigma(const GroupData& G, const Cone& C, const RootSet& K) {
    if (!check_pair(G, C, K).ok()) throw Error(ErrorCode::BadPair, "(C, K) violates the classification conditions");
    const RootDatum& rd = G.rd();
    const WeylGroup& W = G.weyl();
    IMat gens;
    for (auto w : W.parabolic(K))
        for (const auto& g : C.generators()) gens.push_back(mat_vec(W.element(w), g));
    Cone sigma = Cone::from_generators(rd.rank(), gens);
    IMat walls;
    for (auto i : K) walls.push_back(rd.simple_coroots()[i]);
    Cone DK = Cone::from_inequalities(rd.rank(), walls);
    if (intersect(sigma, DK) != C) throw Error(ErrorCode::BadPair, "union of W_K-translates of C is not convex");
    if (!is_w_admissible(G, sigma).admissible) throw Error(ErrorCode::BadPair, "reconstructed cone is not W-admissible");
    auto inv = cone_invariants(G, sigma);
    if (inv.first != C || inv.second != K) throw Error(ErrorCode::BadPair, "round trip of (C, K) failed");
    return sigma;
}

AdmissibleCone AdmissibleCone::make(const GroupData& G, const Cone& sigma) {
    auto [C, K] = cone_invariants(G, sigma);
    return {sigma, C, K};
}

Invariant isotropy_invariant(const GroupData& G, const AdmissibleCone& ac) {
    const RootDatum& rd = G.rd();
    Invariant inv;
    inv.K = ac.K;
    inv.lambda_prime = hnf(hilbert_basis(ac.C, {}, G.caps().hilbert_dim), rd.rank());
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
        bool orth = true;
        for (const auto& g : ac.C.generators())
            if (rd.pairing(g, i) != 0) orth = false;
        if (orth) inv.J.push_back(i);
    }
    return inv;
}

std::size_t orbit_dimension(const GroupData& G, const Invariant& inv) {
    const RootDatum& rd = G.rd();
    std::size_t all = 2 * rd.positive_roots().size();
    std::size_t in_j = 0;
    for (const auto& c : rd.positive_root_coords()) {
        bool inside = true;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0 && std::find(inv.J.begin(), inv.J.end(), i) == inv.J.end()) inside = false;
        if (inside) in_j += 2;
    }
    return inv.lambda_prime.size() + all - in_j;
}

AbelianGroup aut_group(const GroupData& G, const AdmissibleCone& ac) {
    const RootDatum& rd = G.rd();
    IMat L = ac.sigma.dim() ? saturation_basis(ac.sigma.span_basis(), rd.rank()) : IMat{};
    IMat S;
    for (auto i : ac.K) S.push_back(rd.simple_roots()[i]);
    return quotient_group(L, S);
}

AbelianGroup aut_group_toric(const GroupData& G, const Cone& sigma) {
    const RootDatum& rd = G.rd();
    IMat L = sigma.dim() ? saturation_basis(sigma.span_basis(), rd.rank()) : IMat{};
    IMat rel;
    for (auto w : G.stabilizer(sigma))
        for (const auto& x : L) {
            IVec d = sub(x, mat_vec(G.weyl().element(w), x));
            if (!is_zero(d)) rel.push_back(d);
        }
    return quotient_group(L, rel);
}

bool quasiaffine_check(const GroupData& G, const Invariant& inv) {
    const RootDatum& rd = G.rd();
    for (auto k : inv.K) {
        if (!in_lattice(inv.lambda_prime, rd.simple_roots()[k]))
            throw Error(ErrorCode::InvalidTriple, "K is not contained in Lambda'");
        for (auto j : inv.J)
            if (rd.pairing(rd.simple_roots()[k], j) != 0) throw Error(ErrorCode::InvalidTriple, "K and J not orthogonal");
    }
    std::size_t n = rd.rank();
    IMat gens;
    for (const auto& b : inv.lambda_prime) {
        gens.push_back(b);
        gens.push_back(neg(b));
    }
    Cone P = intersect(Cone::from_generators(n, gens), G.chamber());
    if (P.dim() > 0) {
        IMat hb = hilbert_basis(P, inv.lambda_prime, G.caps().hilbert_dim);
        if (hnf(hb, n) != hnf(inv.lambda_prime, n)) return false;
    } else if (!inv.lambda_prime.empty()) {
        return false;
    }
    RootSet J;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
        bool orth = true;
        for (const auto& b : inv.lambda_prime)
            if (rd.pairing(b, i) != 0) orth = false;
        if (orth) J.push_back(i);
    }
    return J == inv.J;
}

OrbitPoset orbit_poset(const GroupData& G, const AdmissibleCone& ac) {
    const WeylGroup& W = G.weyl();
    std::map<Cone, std::vector<Cone>> by_rep;
    for (const auto& f : faces(ac.sigma)) {
        std::size_t w = G.canonical_translate(f);
        by_rep[apply_matrix(W.element(w), f)].push_back(f);
    }
    OrbitPoset op;
    for (auto& [rep, members] : by_rep) {
        OrbitClass oc;
        oc.rep = rep;
        oc.members = members;
        AdmissibleCone fa = AdmissibleCone::make(G, rep);
        oc.inv = isotropy_invariant(G, fa);
        oc.dim = orbit_dimension(G, oc.inv);
        oc.aut = aut_group(G, fa);
        op.classes.push_back(std::move(oc));
    }
    std::size_t m = op.classes.size();
    auto below = [&](std::size_t a, std::size_t b) {
        return a != b && op.classes[b].rep.contains(op.classes[a].rep) && op.classes[a].rep != op.classes[b].rep;
    };
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (!below(a, b)) continue;
            bool cover = true;
            for (std::size_t c = 0; c < m; ++c)
                if (below(a, c) && below(c, b)) cover = false;
            if (cover) op.covers.push_back({a, b});
        }
    return op;
}

std::pair<RootSet, RootSet> fixedpoint_groups(const Invariant& inv) {
    RootSet both = inv.J;
    both.insert(both.end(), inv.K.begin(), inv.K.end());
    std::sort(both.begin(), both.end());
    return {inv.J, both};
}

WComplex toric_side(const GroupData& G, const AdmissibleCone& ac) { return complex_from_cones(G, {ac.sigma}); }

namespace {

bool saturated_wrt(const IMat& gens0, std::size_t n, bool own_lattice) {
    IMat gens;
    for (const auto& g : gens0)
        if (!is_zero(g)) gens.push_back(g);
    if (gens.empty()) return true;
    Cone P = Cone::from_generators(n, gens);
    if (!P.is_pointed()) throw Error(ErrorCode::BadInput, "saturation test needs a pointed monoid");
    IMat L = own_lattice ? hnf(gens, n) : IMat{};
    IMat hb = hilbert_basis(P, L, std::max<std::size_t>(P.dim(), 5));
    std::set<IVec> gs(gens.begin(), gens.end());
    for (const auto& h : hb)
        if (!gs.count(h)) return false;
    return true;
}

}  // namespace

bool is_saturated_in_lattice(const IMat& gens, std::size_t n) { return saturated_wrt(gens, n, true); }
bool is_saturated_in_ambient(const IMat& gens, std::size_t n) { return saturated_wrt(gens, n, false); }

}  // namespace redvar
