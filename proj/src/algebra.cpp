#include "redvar/algebra.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <set>
#include <shared_mutex>

#include <omp.h>

#include "redvar/error.hpp"
#include "redvar/linalg.hpp"

namespace redvar {

ContextPtr make_context(GroupPtr G, const Cone& sigma, const IVec& gamma, const Int& N) {
    RootSet K = cone_invariants(*G, sigma).second;
    return make_context(std::move(G), sigma, K, gamma, N);
}

ContextPtr make_context(GroupPtr G, const Cone& sigma, const RootSet& K, const IVec& gamma, const Int& N) {
    std::size_t n = G->rank();
    if (gamma.size() != n || sigma.ambient() != n) throw Error(ErrorCode::RankMismatch, "grading or cone has the wrong rank");
    if (N < 0) throw Error(ErrorCode::BadInput, "truncation degree must be nonnegative");
    Cone C = intersect(sigma, G->chamber());
    if (!C.is_pointed()) throw Error(ErrorCode::BadGrading, "Lambda^+ ∩ sigma contains a line; no grading bounds it");
    for (const auto& r : C.rays())
        if (dot(r, gamma) <= 0) throw Error(ErrorCode::BadGrading, "grading is not positive on " + to_string(r));
    return std::make_shared<const CharContext>(CharContext{std::move(G), sigma, K, gamma, N});
}

CharElement CharElement::basis(ContextPtr ctx, const Weight& lambda) {
    WeightMap m;
    if (degree(*ctx, lambda) <= ctx->N) m[lambda] = 1;
    return {std::move(ctx), m};
}

Int degree(const CharContext& ctx, const Weight& lambda) { return dot(lambda, ctx.gamma); }

std::vector<Weight> enumerate_basis(const CharContext& ctx) {
    Cone C = intersect(ctx.sigma, ctx.group->chamber());
    IMat hb = hilbert_basis(C, {}, ctx.group->caps().hilbert_dim);
    std::set<Weight> seen{Weight(ctx.group->rank(), 0)};
    std::vector<Weight> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
        Weight x = todo.back();
        todo.pop_back();
        for (const auto& h : hb) {
            Weight y = add(x, h);
            if (degree(ctx, y) <= ctx.N && seen.insert(y).second) todo.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

WeightMap full_product(const CharContext& ctx, const WeightMap& x, const WeightMap& y) {
    const RootDatum& rd = ctx.group->rd();
    WeightMap out;
    for (const auto& [l, a] : x)
        for (const auto& [m, b] : y)
            for (const auto& [nu, c] : product_support_levelK(rd, l, m, ctx.K, ctx.group->caps())) out[nu] += a * b * c;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

WeightMap truncate(const CharContext& ctx, const WeightMap& x) {
    WeightMap out;
    for (const auto& [l, a] : x)
        if (degree(ctx, l) <= ctx.N) out[l] = a;
    return out;
}

CharElement char_product(const CharElement& x, const CharElement& y) {
    if (!(*x.ctx == *y.ctx)) throw Error(ErrorCode::ContextMismatch, "elements live in different character rings");
    return {x.ctx, truncate(*x.ctx, full_product(*x.ctx, x.coeffs, y.coeffs))};
}

std::map<Int, Int> hilbert_function(const CharContext& ctx) {
    std::map<Int, Int> h;
    for (Int d = 0; d <= ctx.N; ++d) h[d] = 0;
    for (const auto& l : enumerate_basis(ctx)) h[degree(ctx, l)] += 1;
    return h;
}

std::map<Int, Int> hilbert_function_monoid(GroupPtr G, const IMat& gens, const IVec& gamma, const Int& N) {
    std::size_t n = G->rank();
    for (const auto& g : gens)
        if (g.size() != n) throw Error(ErrorCode::RankMismatch, "generator has the wrong length");
    if (!is_saturated_in_ambient(gens, n)) throw Error(ErrorCode::NotSaturated, "monoid is not saturated in Lambda");
    Cone sigma = Cone::from_generators(n, gens);
    if (!G->chamber().contains(sigma)) throw Error(ErrorCode::BadInput, "monoid generators must be dominant");
    return hilbert_function(*make_context(G, sigma, RootSet{}, gamma, N));
}

std::map<Int, Int> submonoid_hilbert(const CharContext& ctx) {
    std::map<Int, Int> h;
    for (Int d = 0; d <= ctx.N; ++d) h[d] = 0;
    for (const auto& l : enumerate_basis(ctx)) {
        Int dim = 0;
        for (const auto& [x, m] : levi_truncation(ctx.group->rd(), l, ctx.K, ctx.group->caps())) dim += m;
        h[degree(ctx, l)] += dim * dim;
    }
    return h;
}

namespace {

// Level-K products of pairs of weights, memoized; safe to share across threads.
class PairProducts {
public:
    explicit PairProducts(const CharContext& ctx) : ctx_(ctx) {}

    const WeightMap& get(const Weight& a, const Weight& b) {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        {
            std::shared_lock lock(mu_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        WeightMap p = product_support_levelK(ctx_.group->rd(), key.first, key.second, ctx_.K, ctx_.group->caps());
        std::unique_lock lock(mu_);
        return cache_.emplace(key, std::move(p)).first->second;
    }

    WeightMap times(const WeightMap& x, const Weight& n) {
        WeightMap out;
        for (const auto& [l, a] : x)
            for (const auto& [nu, c] : get(l, n)) out[nu] += a * c;
        for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

private:
    const CharContext& ctx_;
    std::shared_mutex mu_;
    std::map<std::pair<Weight, Weight>, WeightMap> cache_;
};

}  // namespace

bool associativity_check(const CharContext& ctx, Exec exec) {
    auto basis = enumerate_basis(ctx);
    std::size_t b = basis.size();
    std::size_t total = b * b * b;
    PairProducts pp(ctx);
    auto check = [&](std::size_t t) {
        const Weight& l = basis[t / (b * b)];
        const Weight& m = basis[(t / b) % b];
        const Weight& n = basis[t % b];
        // (l m) n against l (m n) = (m n) l
        return truncate(ctx, pp.times(pp.get(l, m), n)) == truncate(ctx, pp.times(pp.get(m, n), l));
    };
    if (exec == Exec::Serial) {
        for (std::size_t t = 0; t < total; ++t)
            if (!check(t)) return false;
        return true;
    }
    bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
    for (std::size_t t = 0; t < total; ++t) ok = ok && check(t);
    return ok;
}

bool semigroup_scalar_check(const CharContext& ctx, const ValueGroup& vg, const ScalarSystem& c) {
    auto basis = enumerate_basis(ctx);
    const RootDatum& rd = ctx.group->rd();
    for (const auto& l : basis)
        for (const auto& m : basis) {
            if (m < l) continue;
            IVec lm = add(c(l), c(m));
            for (const auto& [nu, k] : product_support_levelK(rd, l, m, ctx.K, ctx.group->caps())) {
                if (degree(ctx, nu) > ctx.N) continue;
                if (!vg.is_identity(sub(lm, c(nu)))) return false;
            }
        }
    return true;
}

bool scalar_torsor_check(const CharContext& ctx, const ValueGroup& vg, const ScalarSystem& c, const ScalarSystem& c2) {
    auto basis = enumerate_basis(ctx);
    std::set<Weight> in(basis.begin(), basis.end());
    auto d = [&](const Weight& x) { return sub(c(x), c2(x)); };
    for (const auto& l : basis)
        for (const auto& m : basis) {
            Weight s = add(l, m);
            if (in.count(s) && !vg.is_identity(sub(d(s), add(d(l), d(m))))) return false;
        }
    const RootDatum& rd = ctx.group->rd();
    IMat ZK;
    for (auto k : ctx.K) ZK.push_back(rd.simple_roots()[k]);
    ZK = hnf(ZK, rd.rank());
    for (const auto& l : basis)
        for (const auto& m : basis)
            if (l < m && in_lattice(ZK, sub(l, m)) && !vg.is_identity(sub(d(l), d(m)))) return false;
    return true;
}

std::vector<IdempotentFace> idempotent_faces(const GroupData& G, const AdmissibleCone& ac) {
    OrbitPoset op = orbit_poset(G, ac);
    auto stab = G.stabilizer(ac.sigma);
    std::set<Cone> done;
    std::vector<IdempotentFace> out;
    for (const auto& f : faces(ac.sigma)) {
        if (done.count(f)) continue;
        for (auto w : stab) done.insert(apply_matrix(G.weyl().element(w), f));
        std::size_t cls = op.classes.size();
        for (std::size_t k = 0; k < op.classes.size(); ++k)
            for (const auto& mbr : op.classes[k].members)
                if (mbr == f) cls = k;
        out.push_back({f, cls});
    }
    return out;
}

RootSet graded_degeneration_support(const RootDatum& rd, const IVec& gamma) {
    if (gamma.size() != rd.rank()) throw Error(ErrorCode::RankMismatch, "grading has the wrong length");
    RootSet K;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
        Int p = dot(rd.simple_roots()[i], gamma);
        if (p < 0) throw Error(ErrorCode::BadGrading, "grading is not dominant");
        if (p == 0) K.push_back(i);
    }
    return K;
}

namespace {

// Polynomials in a, b, c, d modulo ad - bc - 1, kept in the normal form without ad.
using Mono = std::array<int, 4>;
using Poly = std::map<Mono, Rat>;

Int binom(int n, int k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

void add_reduced(Poly& out, const Mono& m, const Rat& c) {
    int t = std::min(m[0], m[3]);
    // (ad)^t = (1 + bc)^t
    for (int s = 0; s <= t; ++s) {
        Mono r{m[0] - t, m[1] + s, m[2] + s, m[3] - t};
        out[r] += c * Rat(binom(t, s));
    }
}

Poly mul(const Poly& x, const Poly& y) {
    Poly out;
    for (const auto& [m1, c1] : x)
        for (const auto& [m2, c2] : y)
            add_reduced(out, {m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3]}, c1 * c2);
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Coefficient of x^{n-i} y^i in (a x + c y)^{n-j} (b x + d y)^j.
Poly matrix_coefficient(int n, int i, int j) {
    Poly out;
    for (int p = 0; p <= n - j; ++p)      // y-degree from the first factor
        for (int q = 0; q <= j; ++q) {    // y-degree from the second factor
            if (p + q != i) continue;
            Rat c = Rat(binom(n - j, p) * binom(j, q));
            add_reduced(out, {n - j - p, j - q, p, q}, c);
        }
    return out;
}

std::pair<int, int> biweight(const Mono& m) { return {m[0] + m[1] - m[2] - m[3], m[0] + m[2] - m[1] - m[3]}; }

std::pair<int, int> biweight(int n, int i, int j) { return {n - 2 * i, n - 2 * j}; }

}  // namespace

Sl2Report sl2_oracle(int N) {
    if (N < 0 || N > 6) throw Error(ErrorCode::BadInput, "sl2 oracle supports 0 <= N <= 6");
    auto rd = build_root_datum("A1");
    Sl2Report rep;
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= N; ++m) {
            int e = (n + m) % 2;
            // products landing in bi-weight (e, e)
            std::vector<Poly> prods;
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j)
                    for (int k = 0; k <= m; ++k)
                        for (int l = 0; l <= m; ++l) {
                            auto w1 = biweight(n, i, j), w2 = biweight(m, k, l);
                            if (w1.first + w2.first != e || w1.second + w2.second != e) continue;
                            prods.push_back(mul(matrix_coefficient(n, i, j), matrix_coefficient(m, k, l)));
                        }
            // columns: monomials by descending degree
            std::set<Mono> monos;
            for (const auto& p : prods)
                for (const auto& [mo, c] : p) {
                    if (biweight(mo) != std::make_pair(e, e))
                        throw Error(ErrorCode::OracleMismatch, "bi-weight bookkeeping failed");
                    monos.insert(mo);
                }
            std::vector<Mono> cols(monos.begin(), monos.end());
            auto deg = [](const Mono& mo) { return mo[0] + mo[1] + mo[2] + mo[3]; };
            std::stable_sort(cols.begin(), cols.end(), [&](const Mono& a, const Mono& b) { return deg(a) > deg(b); });
            QMat rows;
            for (const auto& p : prods) {
                QVec r(cols.size(), 0);
                for (std::size_t c = 0; c < cols.size(); ++c) {
                    auto it = p.find(cols[c]);
                    if (it != p.end()) r[c] = it->second;
                }
                rows.push_back(r);
            }
            Rref R = rref(rows, cols.size());
            std::map<int, Int> jumps;
            for (auto piv : R.pivots) jumps[deg(cols[piv])] += 1;
            for (RootSet K : {RootSet{}, RootSet{0}}) {
                WeightMap expect = product_support_levelK(rd, ivec({n}), ivec({m}), K);
                WeightMap got;
                if (K.empty()) {
                    if (jumps.count(n + m)) got[ivec({n + m})] = jumps[n + m];
                } else {
                    for (const auto& [d, c] : jumps) got[ivec({d})] = c;
                }
                ++rep.pairs_checked;
                if (got != expect && rep.ok) {
                    rep.ok = false;
                    rep.mismatch = "(" + std::to_string(n) + "," + std::to_string(m) + ") K=" + (K.empty() ? "{}" : "{a1}");
                }
            }
        }
    return rep;
}

}  // namespace redvar
