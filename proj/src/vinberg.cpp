#include "redvar/vinberg.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "redvar/error.hpp"

namespace redvar {

namespace {

RootSet complement(const RootDatum& rd, const RootSet& s) {
    RootSet out;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
        if (!std::count(s.begin(), s.end(), i)) out.push_back(i);
    return out;
}

RootSet normalized(const RootDatum& rd, RootSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (auto i : s)
        if (i >= rd.semisimple_rank()) throw Error(ErrorCode::BadInput, "unknown simple root index");
    return s;
}

// Dominant, primitive, with <alpha, gamma> > 0 exactly on the given roots.
IVec gamma_for(const RootDatum& rd, const RootSet& positive) {
    QVec t(rd.semisimple_rank(), 0);
    for (auto i : positive) t[i] = 1;
    QVec g = rd.coweight_with_values(t);
    if (is_zero(g)) return IVec(rd.rank(), 0);
    return primitive(g);
}

RootSet intersect_sets(const RootSet& a, const RootSet& b) {
    RootSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Product table of a context at level K against the truncated full tensor product, restricted by K.
bool table_matches(const CharContext& ctx, const RootSet& K) {
    const RootDatum& rd = ctx.group->rd();
    auto basis = enumerate_basis(ctx);
    for (const auto& l : basis)
        for (const auto& m : basis) {
            WeightMap expect;
            for (const auto& [nu, c] : tensor_decompose(rd, l, m, Exec::Serial, ctx.group->caps()))
                if (dominated_by(rd, nu, add(l, m), K) && degree(ctx, nu) <= ctx.N) expect[nu] = c;
            WeightMap got = truncate(ctx, full_product(ctx, {{l, 1}}, {{m, 1}}));
            if (got != expect) return false;
        }
    return true;
}

}  // namespace

bool dominated_by(const RootDatum& rd, const Weight& lambda, const Weight& mu, const RootSet& K) {
    QVec c;
    if (!rd.root_coords(sub(mu, lambda), c)) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].get_den() != 1 || c[i] < 0) return false;
        if (c[i] != 0 && !std::count(K.begin(), K.end(), i)) return false;
    }
    return true;
}

IVec regular_grading(const RootDatum& rd) { return IVec(rd.rank(), 1); }

VinbergFiber vinberg_fiber(GroupPtr G, const RootSet& zeros, const Int& N) {
    const RootDatum& rd = G->rd();
    VinbergFiber f;
    f.zeros = normalized(rd, zeros);
    f.level = complement(rd, f.zeros);
    f.gamma = gamma_for(rd, f.zeros);
    if (graded_degeneration_support(rd, f.gamma) != f.level)
        throw Error(ErrorCode::BadGrading, "no dominant grading orthogonal to the level set");
    f.sigma = reconstruct_sigma(*G, G->chamber(), f.level);
    f.ctx = make_context(G, f.sigma, f.level, regular_grading(rd), N);
    return f;
}

VinbergCrossCheck vinberg_cross_check(GroupPtr G, const Int& N) {
    const RootDatum& rd = G->rd();
    RootSet all = rd.all_roots();
    // Popov: gr for a regular dominant gamma
    RootSet popov = graded_degeneration_support(rd, gamma_for(rd, all));
    VinbergCrossCheck out;
    auto row = [&](const std::string& name, const RootSet& generic, const RootSet& origin) {
        ParametrizationRow r{name, generic, origin};
        Cone s = reconstruct_sigma(*G, G->chamber(), generic);
        auto ctx = make_context(G, s, generic, regular_grading(rd), N);
        r.generic_is_group = s == Cone::full(rd.rank()) && table_matches(*ctx, all);
        r.origin_is_popov = origin == popov;
        out.rows.push_back(r);
    };
    // zero pattern read as the level set, and as its complement
    row("level = zeros", {}, all);
    row("level = Pi minus zeros", all, {});
    for (const auto& r : out.rows)
        if (r.generic_is_group && r.origin_is_popov) out.resolution = r.name;
    return out;
}

VinbergSupport vinberg_ring_support(GroupPtr G, const IVec& gamma, const Int& N) {
    const RootDatum& rd = G->rd();
    if (gamma.size() != rd.rank()) throw Error(ErrorCode::RankMismatch, "grading has the wrong length");
    for (const auto& a : rd.simple_roots())
        if (dot(a, gamma) <= 0) throw Error(ErrorCode::BadGrading, "grading must be positive on the simple roots");
    auto ctx = make_context(G, G->chamber(), RootSet{}, gamma, N);
    VinbergSupport out;
    std::set<std::pair<Weight, Weight>> seen;
    for (const auto& l : enumerate_basis(*ctx)) {
        std::deque<Weight> queue{l};
        std::set<Weight> mus{l};
        while (!queue.empty()) {
            Weight mu = queue.front();
            queue.pop_front();
            for (const auto& a : rd.simple_roots()) {
                Weight next = add(mu, a);
                if (dot(next, gamma) <= N && mus.insert(next).second) queue.push_back(next);
            }
        }
        for (const auto& mu : mus) seen.insert({mu, l});
    }
    out.pairs.assign(seen.begin(), seen.end());
    for (const auto& [m1, l1] : out.pairs)
        for (const auto& [m2, l2] : out.pairs) {
            Weight m = add(m1, m2);
            if (dot(m, gamma) > N) continue;
            ++out.products_checked;
            for (const auto& [nu, c] : tensor_decompose(rd, l1, l2, Exec::Serial, G->caps())) {
                if (!dominated_by(rd, nu, add(l1, l2), rd.all_roots())) continue;
                if (!seen.count({m, nu})) {
                    out.closed = false;
                    out.violation = "product leaves the support";
                    return out;
                }
            }
        }
    return out;
}

XStarVFiber x_star_v_fiber(GroupPtr G, const Cone& sigma, const RootSet& zeros, const Int& N) {
    const RootDatum& rd = G->rd();
    auto [C, K] = cone_invariants(*G, sigma);
    XStarVFiber out;
    out.level = intersect_sets(K, complement(rd, normalized(rd, zeros)));
    if (!check_pair(*G, C, out.level).ok()) throw Error(ErrorCode::BadPair, "degenerate pair is not admissible");
    out.sigma = reconstruct_sigma(*G, C, out.level);
    out.ctx = make_context(G, out.sigma, out.level, regular_grading(rd), N);
    return out;
}

}  // namespace redvar
