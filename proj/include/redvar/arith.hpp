#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace redvar {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using IMat = std::vector<IVec>;  // row-major
using QMat = std::vector<QVec>;

IVec ivec(std::initializer_list<long> xs);
QVec to_q(const IVec& v);
IMat identity(std::size_t n);

bool is_zero(const IVec& v);
bool is_zero(const QVec& v);

Int dot(const IVec& a, const IVec& b);
Rat dot(const QVec& a, const QVec& b);
Rat dot(const IVec& a, const QVec& b);

IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(const IVec& a, const Int& c);
IVec neg(const IVec& a);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Rat& c);

// Divides by the gcd of the entries; zero stays zero.
IVec primitive(const IVec& v);
// Clears denominators, then makes primitive. Direction is preserved.
IVec primitive(const QVec& v);
// Exact integer vector if every entry is integral.
bool to_integral(const QVec& v, IVec& out);

IVec mat_vec(const IMat& m, const IVec& v);
QVec mat_vec(const IMat& m, const QVec& v);
IMat mat_mul(const IMat& a, const IMat& b);
IMat transpose(const IMat& m);
QMat transpose(const QMat& m);

Rat floor_q(const Rat& q);
Int floor_int(const Rat& q);

std::string to_string(const IVec& v);
std::string to_string(const QVec& v);

}  // namespace redvar
