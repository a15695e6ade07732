#include "redvar/arith.hpp"

#include <sstream>

#include "redvar/error.hpp"

namespace redvar {

const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::NotFiniteType: return "NotFiniteType";
        case ErrorCode::RankMismatch: return "RankMismatch";
        case ErrorCode::GroupTooLarge: return "GroupTooLarge";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::BadPair: return "BadPair";
        case ErrorCode::InvalidTriple: return "InvalidTriple";
        case ErrorCode::IllDefinedRestriction: return "IllDefinedRestriction";
        case ErrorCode::NotACocycle: return "NotACocycle";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::OracleMismatch: return "OracleMismatch";
        case ErrorCode::NotAdmissibleLift: return "NotAdmissibleLift";
        case ErrorCode::NotSaturated: return "NotSaturated";
        case ErrorCode::BadGrading: return "BadGrading";
        case ErrorCode::OutOfSupport: return "OutOfSupport";
    }
    return "Unknown";
}

IVec ivec(std::initializer_list<long> xs) {
    IVec v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

QVec to_q(const IVec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

IMat identity(std::size_t n) {
    IMat m(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

bool is_zero(const IVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IVec scale(const IVec& a, const Int& c) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

IVec neg(const IVec& a) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

QVec add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec scale(const QVec& a, const Rat& c) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

IVec primitive(const IVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0 || g == 1) return v;
    IVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

IVec primitive(const QVec& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, Int(x.get_den()));
    IVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat t = v[i] * l;
        r[i] = t.get_num();
    }
    return primitive(r);
}

bool to_integral(const QVec& v, IVec& out) {
    out.assign(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) return false;
        out[i] = v[i].get_num();
    }
    return true;
}

IVec mat_vec(const IMat& m, const IVec& v) {
    IVec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

QVec mat_vec(const IMat& m, const QVec& v) {
    QVec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

IMat mat_mul(const IMat& a, const IMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IMat r(n, IVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

IMat transpose(const IMat& m) {
    if (m.empty()) return {};
    IMat r(m[0].size(), IVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
    return r;
}

QMat transpose(const QMat& m) {
    if (m.empty()) return {};
    QMat r(m[0].size(), QVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
    return r;
}

Int floor_int(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rat floor_q(const Rat& q) { return Rat(floor_int(q)); }

std::string to_string(const IVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ")";
    return os.str();
}

std::string to_string(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ")";
    return os.str();
}

}  // namespace redvar
