#pragma once
// Independent brute-force checks used only by the tests.

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "redvar/arith.hpp"
#include "redvar/linalg.hpp"
#include "redvar/complexes.hpp"
#include "redvar/repthy.hpp"

namespace oracle {

using namespace redvar;

inline Rat det(QMat a) {
    std::size_t n = a.size();
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Rat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

inline void subsets(std::size_t n, std::size_t k, std::function<void(const std::vector<std::size_t>&)> f) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            f(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

// Invariant factors from determinantal divisors.
inline std::vector<Int> invariant_factors(const IMat& m) {
    std::size_t r = m.size(), c = r ? m[0].size() : 0;
    std::vector<Int> d{1};
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        Int g = 0;
        subsets(r, k, [&](const std::vector<std::size_t>& rows) {
            subsets(c, k, [&](const std::vector<std::size_t>& cols) {
                QMat s(k, QVec(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) s[i][j] = m[rows[i]][cols[j]];
                Rat x = det(s);
                g = gcd(g, Int(x.get_num()));
            });
        });
        if (g == 0) break;
        d.push_back(g);
    }
    std::vector<Int> out;
    for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
    return out;
}

// x in cone(gens) iff x is a nonnegative combination of some linearly
// independent subset of gens (Caratheodory).
inline bool in_cone_caratheodory(const IMat& gens, const QVec& x) {
    if (is_zero(x)) return true;
    std::size_t n = x.size();
    bool found = false;
    for (std::size_t k = 1; k <= std::min(n, gens.size()) && !found; ++k) {
        subsets(gens.size(), k, [&](const std::vector<std::size_t>& idx) {
            if (found) return;
            IMat sub;
            for (auto i : idx) sub.push_back(gens[i]);
            if (rank(sub, n) != k) return;
            auto c = solve_combination(to_q(sub), x);
            if (!c) return;
            for (const auto& v : *c)
                if (v < 0) return;
            found = true;
        });
    }
    return found;
}

// Is x a nonnegative integer combination of gens? Gens must lie in an open
// half-space given by `grade` (positive on every generator).
inline bool in_monoid(const IMat& gens, const IVec& x, const IVec& grade, std::map<IVec, bool>& memo) {
    if (is_zero(x)) return true;
    if (dot(grade, x) <= 0) return false;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : gens)
        if (in_monoid(gens, sub(x, g), grade, memo)) {
            ok = true;
            break;
        }
    memo[x] = ok;
    return ok;
}

inline std::vector<IVec> box(std::size_t n, long r) {
    std::vector<IVec> out;
    IVec cur(n, -r);
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < n && cur[i] == r) {
            cur[i] = -r;
            ++i;
        }
        if (i == n) break;
        cur[i] += 1;
    }
    return out;
}

// Multiply formal characters, then peel off highest weights.
inline WeightMap tensor_oracle(const RootDatum& rd, const Weight& l, const Weight& m) {
    std::map<Weight, Int> prod;
    for (const auto& [x, a] : *weight_multiplicities(rd, l))
        for (const auto& [y, b] : *weight_multiplicities(rd, m)) prod[add(x, y)] += a * b;
    IVec f(rd.rank(), 0);
    for (const auto& cv : rd.positive_coroots()) f = add(f, cv);
    WeightMap out;
    for (;;) {
        const Weight* top = nullptr;
        for (const auto& [x, c] : prod)
            if (c != 0 && (!top || dot(x, f) > dot(*top, f))) top = &x;
        if (!top) break;
        Weight nu = *top;
        Int c = prod[nu];
        out[nu] = c;
        for (const auto& [x, a] : *weight_multiplicities(rd, nu)) prod[x] -= c * a;
    }
    return out;
}

inline std::vector<Weight> dominant_box(std::size_t r, long n) {
    std::vector<Weight> out{Weight{}};
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Weight> next;
        for (const auto& w : out)
            for (long k = 0; k <= n; ++k) {
                Weight v = w;
                v.emplace_back(k);
                next.push_back(v);
            }
        out = next;
    }
    return out;
}

// Rows of D2 * D1 lie in the relation lattice of F_0.
inline bool boundary_squared_vanishes(const AutChainComplex& cx) {
    const IMat& d2 = cx.boundary[2];
    const IMat& d1 = cx.boundary[1];
    std::size_t n0 = cx.terms[0].rank;
    IMat rel = hnf(cx.terms[0].relations, n0);
    for (const auto& row : d2) {
        IVec img(n0, 0);
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k] != 0) img = add(img, scale(d1[k], row[k]));
        if (!is_zero(img) && !in_lattice(rel, img)) return false;
    }
    return true;
}

}  // namespace oracle
