#pragma once

#include <optional>
#include <vector>

#include "redvar/arith.hpp"

namespace redvar {

// Reduced row echelon form over Q. Zero rows are dropped.
struct Rref {
    QMat rows;
    std::vector<std::size_t> pivots;
};
Rref rref(const QMat& m, std::size_t ncols);
std::size_t rank(const QMat& m, std::size_t ncols);
std::size_t rank(const IMat& m, std::size_t ncols);

QMat to_q(const IMat& m);

// Canonical basis of the Q-span of the rows: RREF rows scaled to primitive integers.
IMat span_basis(const IMat& rows, std::size_t ncols);
// Basis of {x : A x = 0} over Q, one primitive vector per free column of RREF(A).
IMat nullspace(const IMat& a, std::size_t ncols);
// Some c with sum_i c_i rows[i] = x, if one exists.
std::optional<QVec> solve_combination(const QMat& rows, const QVec& x);
bool in_span(const IMat& rows, const QVec& x);
// Orthogonal projection (standard inner product) of x onto span(rows).
QVec project(const IMat& basis_rows, const QVec& x);

// Hermite normal form of the row lattice: positive pivots, entries above
// pivots reduced into [0, pivot), zero rows dropped. Canonical per lattice.
IMat hnf(const IMat& rows, std::size_t ncols);
// Basis of {x in Z^n : A x = 0} in Hermite form.
IMat integer_kernel(const IMat& a, std::size_t ncols);
// Basis (Hermite form) of Z^n intersected with the Q-span of the rows.
IMat saturation_basis(const IMat& rows, std::size_t ncols);
// Integer coordinates of x in the lattice basis (rows independent), if x lies in it.
std::optional<IVec> lattice_coords(const IMat& basis, const IVec& x);
bool in_lattice(const IMat& basis, const IVec& x);

// Nonzero diagonal entries of the Smith normal form, each dividing the next.
std::vector<Int> smith_diagonal(const IMat& m);

struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup& o) const = default;
};
// L / S where L has basis rows `lattice` and S is generated by `sub` (S inside L).
AbelianGroup quotient_group(const IMat& lattice, const IMat& sub);

}  // namespace redvar
