#include "redvar/linalg.hpp"

#include <algorithm>

#include "redvar/error.hpp"

namespace redvar {

QMat to_q(const IMat& m) {
    QMat r;
    r.reserve(m.size());
    for (const auto& row : m) r.push_back(to_q(row));
    return r;
}

Rref rref(const QMat& m, std::size_t ncols) {
    QMat a = m;
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        Rat inv = 1 / a[r][c];
        for (std::size_t j = c; j < ncols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < ncols; ++j) a[i][j] -= f * a[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

std::size_t rank(const QMat& m, std::size_t ncols) { return rref(m, ncols).pivots.size(); }
std::size_t rank(const IMat& m, std::size_t ncols) { return rank(to_q(m), ncols); }

IMat span_basis(const IMat& rows, std::size_t ncols) {
    Rref r = rref(to_q(rows), ncols);
    IMat out;
    for (const auto& row : r.rows) out.push_back(primitive(row));
    return out;
}

IMat nullspace(const IMat& a, std::size_t ncols) {
    Rref r = rref(to_q(a), ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    IMat out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        QVec x(ncols, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = -r.rows[i][f];
        out.push_back(primitive(x));
    }
    return out;
}

std::optional<QVec> solve_combination(const QMat& rows, const QVec& x) {
    std::size_t k = rows.size(), n = x.size();
    QMat aug(n, QVec(k + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = rows[j][i];
        aug[i][k] = x[i];
    }
    Rref r = rref(aug, k + 1);
    QVec c(k, 0);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == k) return std::nullopt;
        c[r.pivots[i]] = r.rows[i][k];
    }
    return c;
}

bool in_span(const IMat& rows, const QVec& x) {
    return solve_combination(to_q(rows), x).has_value();
}

QVec project(const IMat& basis_rows, const QVec& x) {
    std::size_t k = basis_rows.size();
    QVec out(x.size(), 0);
    if (k == 0) return out;
    QMat b = to_q(basis_rows);
    QMat gram(k, QVec(k + 1, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(b[i], b[j]);
        gram[i][k] = dot(b[i], x);
    }
    Rref r = rref(gram, k + 1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        const Rat& c = r.rows[i][k];
        for (std::size_t j = 0; j < x.size(); ++j) out[j] += c * b[r.pivots[i]][j];
    }
    return out;
}

namespace {

// Unimodular row reduction on the first `ncols` columns. Returns the number of
// pivot rows; the remaining rows vanish on those columns.
std::size_t echelon(IMat& h, std::size_t ncols, bool reduce_above) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < h.size(); ++c) {
        while (true) {
            std::size_t best = h.size();
            for (std::size_t i = r; i < h.size(); ++i) {
                if (h[i][c] == 0) continue;
                if (best == h.size() || abs(h[i][c]) < abs(h[best][c])) best = i;
            }
            if (best == h.size()) break;
            std::swap(h[r], h[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < h.size(); ++i) {
                if (h[i][c] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
                for (std::size_t j = 0; j < h[i].size(); ++j) h[i][j] -= q * h[r][j];
                if (h[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (h[r][c] == 0) continue;
        if (h[r][c] < 0)
            for (auto& x : h[r]) x = -x;
        if (reduce_above) {
            for (std::size_t i = 0; i < r; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
                if (q == 0) continue;
                for (std::size_t j = 0; j < h[i].size(); ++j) h[i][j] -= q * h[r][j];
            }
        }
        ++r;
    }
    return r;
}

}  // namespace

IMat hnf(const IMat& rows, std::size_t ncols) {
    IMat h = rows;
    std::size_t r = echelon(h, ncols, true);
    h.resize(r);
    return h;
}

IMat integer_kernel(const IMat& a, std::size_t ncols) {
    std::size_t m = a.size();
    IMat aug(ncols, IVec(m + ncols, 0));
    for (std::size_t j = 0; j < ncols; ++j) {
        for (std::size_t i = 0; i < m; ++i) aug[j][i] = a[i][j];
        aug[j][m + j] = 1;
    }
    std::size_t r = echelon(aug, m, false);
    IMat ker;
    for (std::size_t i = r; i < aug.size(); ++i)
        ker.emplace_back(aug[i].begin() + static_cast<long>(m), aug[i].end());
    return hnf(ker, ncols);
}

IMat saturation_basis(const IMat& rows, std::size_t ncols) {
    IMat eq = nullspace(rows, ncols);
    if (eq.empty()) return identity(ncols);
    return integer_kernel(eq, ncols);
}

std::optional<IVec> lattice_coords(const IMat& basis, const IVec& x) {
    if (basis.empty()) {
        if (is_zero(x)) return IVec{};
        return std::nullopt;
    }
    auto c = solve_combination(to_q(basis), to_q(x));
    if (!c) return std::nullopt;
    IVec out;
    if (!to_integral(*c, out)) return std::nullopt;
    return out;
}

bool in_lattice(const IMat& basis, const IVec& x) { return lattice_coords(basis, x).has_value(); }

std::vector<Int> smith_diagonal(const IMat& m) {
    IMat a = m;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero absolute value in the trailing block
        auto place_min = [&]() -> bool {
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows) return false;
            std::swap(a[t], a[bi]);
            for (auto& row : a) std::swap(row[t], row[bj]);
            return true;
        };
        if (!place_min()) break;
        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                place_min();
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

AbelianGroup quotient_group(const IMat& lattice, const IMat& sub) {
    IMat coords;
    for (const auto& s : sub) {
        auto c = lattice_coords(lattice, s);
        if (!c) throw Error(ErrorCode::BadInput, "quotient_group: generator " + to_string(s) + " not in lattice");
        coords.push_back(*c);
    }
    AbelianGroup g;
    std::size_t r = lattice.size();
    if (coords.empty() || r == 0) {
        g.free_rank = r;
        return g;
    }
    auto d = smith_diagonal(coords);
    g.free_rank = r - d.size();
    for (const auto& x : d)
        if (x > 1) g.torsion.push_back(x);
    return g;
}

}  // namespace redvar
