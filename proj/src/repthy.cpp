#include "redvar/repthy.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>

#include <omp.h>

#include "redvar/error.hpp"
#include "redvar/linalg.hpp"

namespace redvar {

namespace {

void require_dominant(const RootDatum& rd, const Weight& x) {
    if (x.size() != rd.rank()) throw Error(ErrorCode::RankMismatch, "weight length differs from the rank");
    if (!rd.is_dominant(x)) throw Error(ErrorCode::BadInput, "weight " + to_string(x) + " is not dominant");
}

// (beta, x) for beta = sum b_i alpha_i, using (alpha_i, x) = eps_i <x, alpha_i^vee>.
Rat form(const RootDatum& rd, const IVec& beta_coords, const Weight& x) {
    Rat s = 0;
    for (std::size_t i = 0; i < beta_coords.size(); ++i)
        if (beta_coords[i] != 0) s += Rat(beta_coords[i]) * rd.root_norms()[i] * Rat(rd.pairing(x, i));
    return s;
}

IVec integral_root_coords(const RootDatum& rd, const Weight& d) {
    QVec c;
    rd.root_coords(d, c);
    IVec out;
    to_integral(c, out);
    return out;
}

using CacheKey = std::tuple<IMat, IMat, Weight>;
std::mutex cache_mutex;
std::map<CacheKey, std::shared_ptr<const WeightMap>> cache;

WeightMap compute_multiplicities(const RootDatum& rd, const Weight& lambda) {
    const auto& pos = rd.positive_roots();
    const auto& pc = rd.positive_root_coords();
    // dominant weights below lambda, by increasing depth
    std::set<Weight> seen{lambda};
    std::vector<Weight> dom{lambda};
    for (std::size_t k = 0; k < dom.size(); ++k)
        for (const auto& a : pos) {
            Weight y = sub(dom[k], a);
            if (rd.is_dominant(y) && !seen.count(y)) {
                seen.insert(y);
                dom.push_back(y);
            }
        }
    auto depth = [&](const Weight& x) {
        Int h = 0;
        for (const auto& c : integral_root_coords(rd, sub(lambda, x))) h += c;
        return h;
    };
    std::stable_sort(dom.begin(), dom.end(), [&](const Weight& a, const Weight& b) { return depth(a) < depth(b); });

    std::size_t r = rd.semisimple_rank();
    auto norm_term = [&](const Weight& x) {
        // (lambda - x, lambda + x + 2 rho)
        IVec b = integral_root_coords(rd, sub(lambda, x));
        Rat s = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (b[i] != 0)
                s += Rat(b[i]) * rd.root_norms()[i] * Rat(rd.pairing(lambda, i) + rd.pairing(x, i) + 2);
        return s;
    };
    std::map<Weight, Int> domm;
    auto mult = [&](const Weight& x) -> Int {
        auto it = domm.find(dominant_conjugate(rd, x));
        return it == domm.end() ? Int(0) : it->second;
    };
    for (const auto& mu : dom) {
        if (mu == lambda) {
            domm[mu] = 1;
            continue;
        }
        Rat rhs = 0;
        for (std::size_t a = 0; a < pos.size(); ++a) {
            Weight y = add(mu, pos[a]);
            for (;;) {
                Int m = mult(y);
                if (m == 0) break;
                rhs += 2 * Rat(m) * form(rd, pc[a], y);
                y = add(y, pos[a]);
            }
        }
        Rat m = rhs / norm_term(mu);
        if (m.get_den() != 1) throw Error(ErrorCode::OracleMismatch, "non-integral multiplicity");
        if (m != 0) domm[mu] = m.get_num();
    }
    WeightMap out;
    for (const auto& [mu, m] : domm)
        for (const auto& x : weyl_orbit(rd, mu)) out[x] = m;
    return out;
}

// Dot-action conjugate of y to the dominant chamber; sign 0 when y + rho is singular.
int dot_dominant(const RootDatum& rd, Weight& y) {
    int sign = 1;
    for (;;) {
        bool moved = false;
        for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
            Int p = rd.pairing(y, i);
            if (p == -1) return 0;
            if (p < -1) {
                y = sub(y, scale(rd.simple_roots()[i], p + 1));
                sign = -sign;
                moved = true;
            }
        }
        if (!moved) return sign;
    }
}

}  // namespace

Weight dominant_conjugate(const RootDatum& rd, Weight x) {
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
            if (rd.pairing(x, i) < 0) {
                x = rd.reflect(x, i);
                moved = true;
            }
    }
    return x;
}

std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& x) {
    std::set<Weight> seen{x};
    std::vector<Weight> todo{x};
    while (!todo.empty()) {
        Weight y = todo.back();
        todo.pop_back();
        for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
            Weight z = rd.reflect(y, i);
            if (seen.insert(z).second) todo.push_back(z);
        }
    }
    return {seen.begin(), seen.end()};
}

Int weyl_dim(const RootDatum& rd, const Weight& lambda) {
    require_dominant(rd, lambda);
    Rat d = 1;
    for (const auto& cv : rd.positive_coroots()) {
        auto c = solve_combination(to_q(rd.simple_coroots()), to_q(cv));
        Rat rho = 0;
        for (const auto& x : *c) rho += x;
        d *= (Rat(dot(lambda, cv)) + rho) / rho;
    }
    return d.get_num();
}

std::shared_ptr<const WeightMap> weight_multiplicities(const RootDatum& rd, const Weight& lambda, const Caps& caps) {
    require_dominant(rd, lambda);
    if (weyl_dim(rd, lambda) > Int(static_cast<unsigned long>(caps.rep_dim)))
        throw Error(ErrorCode::DimensionTooLarge, "dim V_lambda exceeds the configured bound");
    CacheKey key{rd.simple_roots(), rd.simple_coroots(), lambda};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto m = std::make_shared<const WeightMap>(compute_multiplicities(rd, lambda));
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, m).first->second;
}

WeightMap tensor_decompose(const RootDatum& rd, const Weight& lambda, const Weight& mu, Exec exec, const Caps& caps) {
    require_dominant(rd, lambda);
    require_dominant(rd, mu);
    if (weyl_dim(rd, lambda) * weyl_dim(rd, mu) > Int(static_cast<unsigned long>(caps.rep_dim)))
        throw Error(ErrorCode::DimensionTooLarge, "dim of the tensor product exceeds the configured bound");
    // iterate over the smaller weight system
    bool swap = weyl_dim(rd, mu) > weyl_dim(rd, lambda);
    const Weight& big = swap ? mu : lambda;
    auto wm = weight_multiplicities(rd, swap ? lambda : mu, caps);
    std::vector<std::pair<Weight, Int>> items(wm->begin(), wm->end());
    auto contribute = [&](std::size_t k, WeightMap& acc) {
        Weight y = add(big, items[k].first);
        int s = dot_dominant(rd, y);
        if (s != 0) acc[y] += s * items[k].second;
    };
    WeightMap total;
    if (exec == Exec::Serial) {
        for (std::size_t k = 0; k < items.size(); ++k) contribute(k, total);
    } else {
        std::vector<WeightMap> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(static)
        for (std::size_t k = 0; k < items.size(); ++k) contribute(k, parts[static_cast<std::size_t>(omp_get_thread_num())]);
        for (const auto& p : parts)
            for (const auto& [w, c] : p) total[w] += c;
    }
    WeightMap out;
    for (const auto& [w, c] : total) {
        if (c < 0) throw Error(ErrorCode::OracleMismatch, "negative tensor coefficient");
        if (c > 0) out[w] = c;
    }
    return out;
}

WeightMap levi_truncation(const RootDatum& rd, const Weight& lambda, const RootSet& K, const Caps& caps) {
    WeightMap out;
    for (const auto& [x, m] : *weight_multiplicities(rd, lambda, caps))
        if (dominance_le(rd, x, lambda, K)) out[x] = m;
    return out;
}

WeightMap product_support_levelK(const RootDatum& rd, const Weight& lambda, const Weight& mu, const RootSet& K,
                                 const Caps& caps) {
    Weight top = add(lambda, mu);
    WeightMap out;
    for (const auto& [nu, c] : tensor_decompose(rd, lambda, mu, Exec::Serial, caps))
        if (dominance_le(rd, nu, top, K)) out[nu] = c;
    return out;
}

bool transvectant_check(const RootDatum& rd, const Weight& lambda, std::size_t alpha, const RootSet& K,
                        const Caps& caps) {
    require_dominant(rd, lambda);
    if (alpha >= rd.semisimple_rank()) throw Error(ErrorCode::BadInput, "no such simple root");
    if (std::find(K.begin(), K.end(), alpha) == K.end()) throw Error(ErrorCode::BadInput, "alpha is not in K");
    if (rd.pairing(lambda, alpha) == 0) throw Error(ErrorCode::BadInput, "<lambda, alpha^vee> = 0");
    Weight t = sub(scale(lambda, 2), rd.simple_roots()[alpha]);
    if (!rd.is_dominant(t)) return false;
    auto sup = product_support_levelK(rd, lambda, lambda, K, caps);
    auto it = sup.find(t);
    return it != sup.end() && it->second >= 1;
}

}  // namespace redvar
