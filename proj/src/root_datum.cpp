#include "redvar/root_datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "redvar/error.hpp"
#include "redvar/linalg.hpp"

namespace redvar {

Caps caps_from_env() {
    Caps c;
    const char* env = std::getenv("REDVAR_CAPS");
    if (!env) return c;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        std::size_t val = std::stoul(item.substr(eq + 1));
        if (key == "weyl") c.weyl_order = val;
        else if (key == "dim") c.rep_dim = val;
        else if (key == "hilbert") c.hilbert_dim = val;
    }
    return c;
}

namespace {

Rat determinant(QMat a) {
    std::size_t n = a.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

}  // namespace

RootDatum::RootDatum(std::size_t rank, IMat simple_roots, IMat simple_coroots, std::string name)
    : rank_(rank), roots_(std::move(simple_roots)), coroots_(std::move(simple_coroots)), name_(std::move(name)) {
    if (rank_ == 0) throw Error(ErrorCode::RankMismatch, "rank must be positive");
    if (roots_.size() != coroots_.size())
        throw Error(ErrorCode::RankMismatch, "number of simple roots and coroots differ");
    for (const auto& r : roots_)
        if (r.size() != rank_) throw Error(ErrorCode::RankMismatch, "simple root has wrong length");
    for (const auto& r : coroots_)
        if (r.size() != rank_) throw Error(ErrorCode::RankMismatch, "simple coroot has wrong length");
    if (roots_.size() > rank_) throw Error(ErrorCode::RankMismatch, "more simple roots than the rank");
    std::size_t s = roots_.size();
    cartan_.assign(s, IVec(s, 0));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) cartan_[i][j] = dot(roots_[i], coroots_[j]);
    validate();
    build_positive_roots();
}

void RootDatum::validate() const {
    std::size_t s = roots_.size();
    const IMat& A = cartan_;
    for (std::size_t i = 0; i < s; ++i) {
        if (A[i][i] != 2) throw Error(ErrorCode::NotFiniteType, "Cartan diagonal entry is not 2");
        for (std::size_t j = 0; j < s; ++j) {
            if (i == j) continue;
            if (A[i][j] > 0) throw Error(ErrorCode::NotFiniteType, "positive off-diagonal Cartan entry");
            if ((A[i][j] == 0) != (A[j][i] == 0))
                throw Error(ErrorCode::NotFiniteType, "Cartan zero pattern is not symmetric");
        }
    }
    // principal minors
    for (std::size_t mask = 1; mask < (std::size_t(1) << s); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < s; ++i)
            if (mask >> i & 1) idx.push_back(i);
        QMat sub(idx.size(), QVec(idx.size()));
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = A[idx[a]][idx[b]];
        if (determinant(sub) <= 0) throw Error(ErrorCode::NotFiniteType, "Cartan matrix is not of finite type");
    }
}

void RootDatum::build_positive_roots() {
    std::size_t s = roots_.size();
    const IMat& A = cartan_;
    // symmetrising factors
    norms_.assign(s, 0);
    for (std::size_t start = 0; start < s; ++start) {
        if (norms_[start] != 0) continue;
        std::vector<std::size_t> comp{start};
        norms_[start] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            std::size_t i = comp[k];
            for (std::size_t j = 0; j < s; ++j) {
                if (j == i || A[i][j] == 0 || norms_[j] != 0) continue;
                norms_[j] = norms_[i] * Rat(A[j][i]) / Rat(A[i][j]);
                comp.push_back(j);
            }
        }
        Rat mn = norms_[comp[0]];
        for (auto i : comp) mn = std::min(mn, norms_[i]);
        for (auto i : comp) norms_[i] /= mn;
    }
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (Rat(A[i][j]) * norms_[j] != Rat(A[j][i]) * norms_[i])
                throw Error(ErrorCode::NotFiniteType, "Cartan matrix is not symmetrisable");

    std::set<IVec> seen;
    std::vector<IVec> todo;
    for (std::size_t i = 0; i < s; ++i) {
        IVec e(s, 0);
        e[i] = 1;
        seen.insert(e);
        todo.push_back(e);
    }
    while (!todo.empty()) {
        IVec c = todo.back();
        todo.pop_back();
        for (std::size_t i = 0; i < s; ++i) {
            Int p = 0;
            for (std::size_t j = 0; j < s; ++j) p += c[j] * A[j][i];
            IVec d = c;
            d[i] -= p;
            bool nonneg = true;
            for (const auto& x : d)
                if (x < 0) nonneg = false;
            if (nonneg && !is_zero(d) && seen.insert(d).second) todo.push_back(d);
        }
    }
    std::vector<IVec> coords(seen.begin(), seen.end());
    std::sort(coords.begin(), coords.end(), [](const IVec& a, const IVec& b) {
        Int ha = 0, hb = 0;
        for (const auto& x : a) ha += x;
        for (const auto& x : b) hb += x;
        if (ha != hb) return ha < hb;
        return a < b;
    });
    pos_coords_ = coords;
    pos_roots_.clear();
    pos_coroots_.clear();
    for (const auto& c : coords) {
        IVec r(rank_, 0);
        for (std::size_t i = 0; i < s; ++i) r = add(r, scale(roots_[i], c[i]));
        pos_roots_.push_back(r);
        Rat eps = 0;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) eps += Rat(c[i] * c[j] * A[i][j]) * norms_[j];
        eps /= 2;
        QVec cv(rank_, 0);
        for (std::size_t i = 0; i < s; ++i) {
            Rat f = Rat(c[i]) * norms_[i] / eps;
            for (std::size_t k = 0; k < rank_; ++k) cv[k] += f * coroots_[i][k];
        }
        IVec icv;
        if (!to_integral(cv, icv)) throw Error(ErrorCode::NotFiniteType, "non-integral coroot");
        pos_coroots_.push_back(icv);
    }
}

RootSet RootDatum::all_roots() const {
    RootSet r;
    for (std::size_t i = 0; i < roots_.size(); ++i) r.push_back(i);
    return r;
}

bool RootDatum::is_dominant(const Weight& x) const {
    for (std::size_t i = 0; i < roots_.size(); ++i)
        if (pairing(x, i) < 0) return false;
    return true;
}

Weight RootDatum::reflect(const Weight& x, std::size_t i) const {
    return sub(x, scale(roots_[i], pairing(x, i)));
}

IMat RootDatum::reflection_matrix(std::size_t i) const {
    IMat m = identity(rank_);
    for (std::size_t r = 0; r < rank_; ++r)
        for (std::size_t c = 0; c < rank_; ++c) m[r][c] -= roots_[i][r] * coroots_[i][c];
    return m;
}

bool RootDatum::root_coords(const Weight& x, QVec& out) const {
    if (roots_.empty()) {
        out.clear();
        return is_zero(x);
    }
    auto c = solve_combination(to_q(roots_), to_q(x));
    if (!c) return false;
    out = *c;
    return true;
}

QVec RootDatum::coweight_with_values(const QVec& t) const {
    std::size_t s = roots_.size();
    // equation j: sum_i c_i <alpha_j, alpha_i^vee> = t_j
    QMat rows(s, QVec(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) rows[i][j] = cartan_[j][i];
    auto c = solve_combination(rows, t);
    QVec g(rank_, 0);
    if (!c) return g;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = 0; k < rank_; ++k) g[k] += (*c)[i] * coroots_[i][k];
    return g;
}

namespace {

IMat cartan_of(char type, std::size_t n) {
    IMat A(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) A[i][i] = 2;
    auto link = [&](std::size_t i, std::size_t j) {
        A[i][j] = -1;
        A[j][i] = -1;
    };
    switch (type) {
        case 'A':
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':
            if (n < 2) throw Error(ErrorCode::BadInput, "B_n needs n >= 2");
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
            A[n - 2][n - 1] = -2;  // <alpha_{n-1}, alpha_n^vee>, alpha_n short
            break;
        case 'C':
            if (n < 2) throw Error(ErrorCode::BadInput, "C_n needs n >= 2");
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
            A[n - 1][n - 2] = -2;  // alpha_n long
            break;
        case 'D':
            if (n < 3) throw Error(ErrorCode::BadInput, "D_n needs n >= 3");
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'G':
            if (n != 2) throw Error(ErrorCode::BadInput, "only G2 is defined");
            A[0][1] = -1;
            A[1][0] = -3;  // alpha_1 short
            break;
        default:
            throw Error(ErrorCode::BadInput, std::string("unsupported type ") + type);
    }
    return A;
}

struct Block {
    std::size_t rank;
    IMat roots, coroots;
};

Block block_of(const std::string& tok) {
    if (tok.empty()) throw Error(ErrorCode::BadInput, "empty type token");
    auto parse_n = [&](std::size_t pos) {
        std::string num = tok.substr(pos);
        if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit))
            throw Error(ErrorCode::BadInput, "malformed type token: " + tok);
        std::size_t n = std::stoul(num);
        if (n == 0) throw Error(ErrorCode::BadInput, "rank 0 in type token: " + tok);
        return n;
    };
    Block b;
    if (tok.rfind("GL", 0) == 0) {
        std::size_t n = parse_n(2);
        b.rank = n;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            IVec r(n, 0);
            r[i] = 1;
            r[i + 1] = -1;
            b.roots.push_back(r);
            b.coroots.push_back(r);
        }
        return b;
    }
    if (tok[0] == 'T') {
        b.rank = parse_n(1);
        return b;
    }
    std::size_t n = parse_n(1);
    IMat A = cartan_of(tok[0], n);
    b.rank = n;
    b.roots = A;  // alpha_i in the fundamental-weight basis: (<alpha_i, alpha_j^vee>)_j
    b.coroots = identity(n);
    return b;
}

}  // namespace

RootDatum build_root_datum(const std::string& type) {
    std::vector<Block> blocks;
    std::stringstream ss(type);
    std::string tok;
    while (std::getline(ss, tok, 'x')) blocks.push_back(block_of(tok));
    if (blocks.empty()) throw Error(ErrorCode::BadInput, "empty type");
    std::size_t rank = 0;
    for (const auto& b : blocks) rank += b.rank;
    IMat roots, coroots;
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.roots.size(); ++i) {
            IVec r(rank, 0), c(rank, 0);
            for (std::size_t k = 0; k < b.rank; ++k) {
                r[off + k] = b.roots[i][k];
                c[off + k] = b.coroots[i][k];
            }
            roots.push_back(r);
            coroots.push_back(c);
        }
        off += b.rank;
    }
    return RootDatum(rank, roots, coroots, type);
}

RootDatum build_root_datum(std::size_t rank, const IMat& simple_roots, const IMat& simple_coroots) {
    return RootDatum(rank, simple_roots, simple_coroots, "custom");
}

bool dominance_le(const RootDatum& rd, const Weight& nu, const Weight& lambda, const RootSet& K) {
    IVec d = sub(lambda, nu);
    if (is_zero(d)) return true;
    QVec c;
    if (!rd.root_coords(d, c)) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (c[i] < 0 || c[i].get_den() != 1) return false;
        if (std::find(K.begin(), K.end(), i) == K.end()) return false;
    }
    return true;
}

Cone dominant_chamber(const RootDatum& rd) {
    return Cone::from_inequalities(rd.rank(), rd.simple_coroots());
}

Weight w_apply(const IMat& w, const Weight& x) { return mat_vec(w, x); }
QVec w_apply(const IMat& w, const QVec& x) { return mat_vec(w, x); }

WeylGroup::WeylGroup(const RootDatum& rd, std::size_t cap) {
    std::size_t s = rd.semisimple_rank();
    std::vector<IMat> gens;
    for (std::size_t i = 0; i < s; ++i) gens.push_back(rd.reflection_matrix(i));
    std::map<IMat, std::size_t> index;
    elements_.push_back(identity(rd.rank()));
    words_.push_back({});
    index[elements_[0]] = 0;
    std::vector<std::size_t> level{0};
    while (!level.empty()) {
        std::map<IMat, std::vector<std::size_t>> next;
        for (auto g : level)
            for (std::size_t i = 0; i < s; ++i) {
                IMat h = mat_mul(elements_[g], gens[i]);
                if (index.count(h) || next.count(h)) continue;
                auto w = words_[g];
                w.push_back(i);
                next.emplace(std::move(h), std::move(w));
            }
        level.clear();
        for (auto& [m, w] : next) {
            if (elements_.size() >= cap)
                throw Error(ErrorCode::GroupTooLarge, "Weyl group exceeds cap " + std::to_string(cap));
            index[m] = elements_.size();
            level.push_back(elements_.size());
            elements_.push_back(m);
            words_.push_back(w);
        }
    }
    simple_idx_.resize(s);
    for (std::size_t i = 0; i < s; ++i) simple_idx_[i] = index.at(gens[i]);
}

std::size_t WeylGroup::index_of(const IMat& m) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == m) return i;
    return elements_.size();
}

std::vector<std::size_t> WeylGroup::parabolic(const RootSet& S) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        bool ok = true;
        for (auto k : words_[i])
            if (std::find(S.begin(), S.end(), k) == S.end()) ok = false;
        if (ok) out.push_back(i);
    }
    return out;
}

}  // namespace redvar
