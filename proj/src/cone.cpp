#include "redvar/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "redvar/error.hpp"
#include "redvar/linalg.hpp"

namespace redvar {

namespace {

void sort_unique(IMat& m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
}

bool adjacent(const IMat& processed, const IVec& p, const IVec& q, std::size_t n, std::size_t lin_dim) {
    IMat tight;
    for (const auto& b : processed)
        if (dot(b, p) == 0 && dot(b, q) == 0) tight.push_back(b);
    if (tight.size() + 2 + lin_dim < n) return false;
    return rank(tight, n) + 2 + lin_dim == n;
}

}  // namespace

DDResult double_description(std::size_t n, const IMat& ineqs) {
    IMat L = identity(n);
    IMat R;
    IMat processed;
    for (const auto& a0 : ineqs) {
        if (is_zero(a0)) continue;
        IVec a = primitive(a0);
        std::size_t idx = L.size();
        for (std::size_t i = 0; i < L.size(); ++i)
            if (dot(a, L[i]) != 0) {
                idx = i;
                break;
            }
        if (idx < L.size()) {
            IVec l0 = L[idx];
            Int al0 = dot(a, l0);
            if (al0 < 0) {
                l0 = neg(l0);
                al0 = -al0;
            }
            IMat nl, nr;
            for (std::size_t i = 0; i < L.size(); ++i) {
                if (i == idx) continue;
                Int al = dot(a, L[i]);
                nl.push_back(primitive(sub(scale(L[i], al0), scale(l0, al))));
            }
            for (const auto& r : R) {
                Int ar = dot(a, r);
                nr.push_back(primitive(sub(scale(r, al0), scale(l0, ar))));
            }
            nr.push_back(primitive(l0));
            L = std::move(nl);
            R = std::move(nr);
        } else {
            IMat pos, zer, negs;
            for (const auto& r : R) {
                Int ar = dot(a, r);
                if (ar > 0) pos.push_back(r);
                else if (ar == 0) zer.push_back(r);
                else negs.push_back(r);
            }
            IMat nr = pos;
            nr.insert(nr.end(), zer.begin(), zer.end());
            for (const auto& p : pos)
                for (const auto& q : negs) {
                    if (!adjacent(processed, p, q, n, L.size())) continue;
                    Int ap = dot(a, p), aq = dot(a, q);
                    nr.push_back(primitive(sub(scale(q, ap), scale(p, aq))));
                }
            sort_unique(nr);
            R = std::move(nr);
        }
        processed.push_back(a);
    }
    sort_unique(R);
    return {L, R};
}

Cone Cone::from_generators(std::size_t ambient, const IMat& gens) {
    std::vector<QVec> q;
    q.reserve(gens.size());
    for (const auto& g : gens) q.push_back(to_q(g));
    return from_generators(ambient, q);
}

Cone Cone::from_generators(std::size_t n, const std::vector<QVec>& gens_q) {
    IMat gens;
    for (const auto& g : gens_q) {
        if (g.size() != n) throw Error(ErrorCode::RankMismatch, "cone generator has wrong length");
        if (!redvar::is_zero(g)) gens.push_back(primitive(g));
    }
    sort_unique(gens);
    Cone c;
    c.n_ = n;
    DDResult dual = double_description(n, gens);
    c.equations_ = redvar::span_basis(dual.lineality, n);
    IMat span = nullspace(c.equations_, n);
    for (const auto& f : dual.rays) {
        IVec p = primitive(project(span, to_q(f)));
        if (!redvar::is_zero(p)) c.facets_.push_back(p);
    }
    sort_unique(c.facets_);
    IMat cons = c.facets_;
    for (const auto& e : c.equations_) {
        cons.push_back(e);
        cons.push_back(neg(e));
    }
    DDResult primal = double_description(n, cons);
    c.lineality_ = redvar::span_basis(primal.lineality, n);
    for (const auto& r : primal.rays) {
        QVec x = to_q(r);
        IVec p = primitive(sub(x, project(c.lineality_, x)));
        if (!redvar::is_zero(p)) c.rays_.push_back(p);
    }
    sort_unique(c.rays_);
    return c;
}

Cone Cone::from_inequalities(std::size_t n, const IMat& ineqs, const IMat& eqs) {
    IMat cons = ineqs;
    for (const auto& e : eqs) {
        cons.push_back(e);
        cons.push_back(neg(e));
    }
    for (const auto& r : cons)
        if (r.size() != n) throw Error(ErrorCode::RankMismatch, "inequality has wrong length");
    DDResult d = double_description(n, cons);
    IMat gens = d.rays;
    for (const auto& l : d.lineality) {
        gens.push_back(l);
        gens.push_back(neg(l));
    }
    return from_generators(n, gens);
}

Cone Cone::zero(std::size_t n) { return from_generators(n, IMat{}); }

Cone Cone::full(std::size_t n) {
    IMat g = identity(n);
    for (std::size_t i = 0; i < n; ++i) g.push_back(neg(identity(n)[i]));
    return from_generators(n, g);
}

IMat Cone::generators() const {
    IMat g = rays_;
    for (const auto& l : lineality_) {
        g.push_back(l);
        g.push_back(neg(l));
    }
    return g;
}

IMat Cone::span_basis() const { return nullspace(equations_, n_); }

bool Cone::in_span(const QVec& x) const {
    for (const auto& e : equations_)
        if (dot(e, x) != 0) return false;
    return true;
}

bool Cone::contains(const QVec& x) const {
    if (x.size() != n_) throw Error(ErrorCode::RankMismatch, "point has wrong length");
    if (!in_span(x)) return false;
    for (const auto& f : facets_)
        if (dot(f, x) < 0) return false;
    return true;
}

bool Cone::contains_in_relint(const QVec& x) const {
    if (x.size() != n_) throw Error(ErrorCode::RankMismatch, "point has wrong length");
    if (!in_span(x)) return false;
    for (const auto& f : facets_)
        if (dot(f, x) <= 0) return false;
    return true;
}

bool Cone::contains(const Cone& o) const {
    for (const auto& g : o.generators())
        if (!contains(g)) return false;
    return true;
}

QVec Cone::relint_point() const {
    QVec p(n_, 0);
    for (const auto& r : rays_)
        for (std::size_t i = 0; i < n_; ++i) p[i] += r[i];
    return p;
}

bool Cone::operator<(const Cone& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (dim() != o.dim()) return dim() > o.dim();
    if (rays_ != o.rays_) return rays_ < o.rays_;
    return lineality_ < o.lineality_;
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient() != b.ambient()) throw Error(ErrorCode::RankMismatch, "intersect: ambient mismatch");
    IMat ineq = a.facets();
    ineq.insert(ineq.end(), b.facets().begin(), b.facets().end());
    IMat eq = a.equations();
    eq.insert(eq.end(), b.equations().begin(), b.equations().end());
    return Cone::from_inequalities(a.ambient(), ineq, eq);
}

std::vector<Cone> facets_of(const Cone& a) {
    std::vector<Cone> out;
    for (const auto& f : a.facets()) {
        IMat g;
        for (const auto& r : a.rays())
            if (dot(f, r) == 0) g.push_back(r);
        for (const auto& l : a.lineality()) {
            g.push_back(l);
            g.push_back(neg(l));
        }
        out.push_back(Cone::from_generators(a.ambient(), g));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Cone> faces(const Cone& a) {
    std::set<Cone> seen{a};
    std::vector<Cone> todo{a};
    while (!todo.empty()) {
        Cone c = todo.back();
        todo.pop_back();
        for (auto& f : facets_of(c))
            if (seen.insert(f).second) todo.push_back(f);
    }
    return {seen.begin(), seen.end()};
}

bool is_face(const Cone& f, const Cone& a) {
    if (!a.contains(f)) return false;
    // f is a face iff it equals the face of a cut out by the facets tight on relint(f)
    QVec p = f.relint_point();
    IMat g;
    for (const auto& r : a.rays()) {
        bool tight = true;
        for (const auto& u : a.facets())
            if (dot(u, p) == 0 && dot(u, r) != 0) {
                tight = false;
                break;
            }
        if (tight) g.push_back(r);
    }
    for (const auto& l : a.lineality()) {
        g.push_back(l);
        g.push_back(neg(l));
    }
    return Cone::from_generators(a.ambient(), g) == f;
}

Cone apply_matrix(const IMat& w, const Cone& a) {
    IMat g;
    for (const auto& x : a.generators()) g.push_back(mat_vec(w, x));
    return Cone::from_generators(a.ambient(), g);
}

bool interiors_intersect(const Cone& a, const Cone& b) {
    Cone c = intersect(a, b);
    QVec p = c.relint_point();
    return a.contains_in_relint(p) && b.contains_in_relint(p);
}

Cone join(const Cone& a, const Cone& b) {
    IMat g = a.generators();
    IMat h = b.generators();
    g.insert(g.end(), h.begin(), h.end());
    return Cone::from_generators(a.ambient(), g);
}

std::vector<IMat> triangulate(const Cone& a) {
    if (!a.is_pointed()) throw Error(ErrorCode::BadInput, "triangulate: cone not pointed");
    if (a.rays().size() == a.dim()) return {a.rays()};
    const IVec& v0 = a.rays()[0];
    std::vector<IMat> out;
    for (const auto& f : facets_of(a)) {
        if (f.contains(v0)) continue;
        for (auto s : triangulate(f)) {
            s.push_back(v0);
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
    }
    return out;
}

namespace {

// Hilbert basis of a pointed full-dimensional cone in Z^m.
IMat pointed_hilbert_basis(const Cone& c) {
    std::size_t m = c.ambient();
    std::set<IVec> cand(c.rays().begin(), c.rays().end());
    for (const auto& simplex : triangulate(c)) {
        QMat R = to_q(simplex);
        // rows of R^{-1}: t(e_j) = e_j R^{-1}
        QMat aug(m, QVec(2 * m, 0));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) aug[i][j] = R[i][j];
            aug[i][m + i] = 1;
        }
        // solve R X = I then t(e_j) = row j of R^{-1}; R^{-1} = X
        Rref rr = rref(aug, 2 * m);
        QMat inv(m, QVec(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) inv[i][j] = rr.rows[i][m + j];
        auto frac = [](QVec t) {
            for (auto& x : t) x -= floor_q(x);
            return t;
        };
        std::set<QVec> group{QVec(m, 0)};
        std::vector<QVec> todo{QVec(m, 0)};
        while (!todo.empty()) {
            QVec t = todo.back();
            todo.pop_back();
            for (std::size_t j = 0; j < m; ++j) {
                QVec u = frac(add(t, inv[j]));
                if (group.insert(u).second) todo.push_back(u);
            }
        }
        for (const auto& t : group) {
            if (is_zero(t)) continue;
            QVec p(m, 0);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) p[j] += t[i] * R[i][j];
            IVec ip;
            to_integral(p, ip);
            cand.insert(ip);
        }
    }
    IMat out;
    for (const auto& x : cand) {
        bool reducible = false;
        for (const auto& y : cand) {
            if (y == x) continue;
            IVec d = sub(x, y);
            if (c.contains(d)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.push_back(x);
    }
    return out;
}

// Integer solution x of Q x = e, assuming one exists.
IVec integer_preimage(const IMat& Q, std::size_t j, std::size_t d) {
    IMat aug(Q.size(), IVec(d + 1, 0));
    for (std::size_t i = 0; i < Q.size(); ++i) {
        aug[i][0] = (i == j) ? -1 : 0;
        for (std::size_t k = 0; k < d; ++k) aug[i][k + 1] = Q[i][k];
    }
    IMat ker = integer_kernel(aug, d + 1);
    for (const auto& row : ker)
        if (row[0] != 0) {
            if (row[0] != 1) throw Error(ErrorCode::BadInput, "lattice section does not exist");
            return IVec(row.begin() + 1, row.end());
        }
    throw Error(ErrorCode::BadInput, "lattice section does not exist");
}

}  // namespace

IMat hilbert_basis(const Cone& a, const IMat& lattice, std::size_t max_dim) {
    std::size_t n = a.ambient();
    if (a.dim() > max_dim)
        throw Error(ErrorCode::DimensionTooLarge,
                    "hilbert_basis: dimension " + std::to_string(a.dim()) + " exceeds bound " + std::to_string(max_dim));
    if (a.dim() == 0) return {};
    IMat L = lattice.empty() ? identity(n) : lattice;
    // M = L ∩ span(a)
    IMat EL;
    for (const auto& e : a.equations()) {
        IVec row;
        for (const auto& l : L) row.push_back(dot(e, l));
        EL.push_back(row);
    }
    IMat cs = EL.empty() ? identity(L.size()) : integer_kernel(EL, L.size());
    IMat M;
    for (const auto& c : cs) {
        IVec v(n, 0);
        for (std::size_t i = 0; i < c.size(); ++i) v = add(v, scale(L[i], c[i]));
        M.push_back(v);
    }
    std::size_t d = M.size();
    if (d != a.dim()) throw Error(ErrorCode::BadInput, "hilbert_basis: lattice does not span the cone");
    QMat Mq = to_q(M);
    auto coords = [&](const IVec& x) {
        auto c = solve_combination(Mq, to_q(x));
        return *c;
    };
    auto to_ambient = [&](const IVec& c) {
        IVec v(n, 0);
        for (std::size_t i = 0; i < d; ++i) v = add(v, scale(M[i], c[i]));
        return v;
    };
    std::vector<QVec> gq;
    for (const auto& g : a.generators()) gq.push_back(coords(g));
    Cone ad = Cone::from_generators(d, gq);

    IMat BL = ad.lineality().empty() ? IMat{} : saturation_basis(ad.lineality(), d);
    IMat out;
    if (BL.empty()) {
        for (const auto& h : pointed_hilbert_basis(ad)) out.push_back(to_ambient(h));
    } else {
        IMat Q = integer_kernel(BL, d);
        std::size_t q = Q.size();
        IMat section;
        for (std::size_t j = 0; j < q; ++j) section.push_back(integer_preimage(Q, j, d));
        IMat proj;
        for (const auto& g : ad.generators()) proj.push_back(mat_vec(Q, g));
        Cone pc = Cone::from_generators(q, proj);
        for (const auto& h : (q ? pointed_hilbert_basis(pc) : IMat{})) {
            IVec lift(d, 0);
            for (std::size_t j = 0; j < q; ++j) lift = add(lift, scale(section[j], h[j]));
            out.push_back(to_ambient(lift));
        }
        for (const auto& b : BL) {
            out.push_back(to_ambient(b));
            out.push_back(to_ambient(neg(b)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace redvar
