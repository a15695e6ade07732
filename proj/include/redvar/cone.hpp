#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "redvar/arith.hpp"

namespace redvar {

// Rational polyhedral cone in Q^n, stored canonically:
//  - lineality: RREF basis of the lineality space, primitive rows
//  - rays: extreme rays of the pointed part, projected orthogonally off the
//    lineality space, primitive, sorted
//  - facets: facet covectors projected onto the span, primitive, sorted
//  - equations: RREF basis of the orthogonal complement of the span
class Cone {
public:
    Cone() = default;
    static Cone from_generators(std::size_t ambient, const std::vector<QVec>& gens);
    static Cone from_generators(std::size_t ambient, const IMat& gens);
    static Cone from_inequalities(std::size_t ambient, const IMat& ineqs, const IMat& eqs = {});
    static Cone zero(std::size_t ambient);
    static Cone full(std::size_t ambient);

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return n_ - equations_.size(); }
    const IMat& rays() const { return rays_; }
    const IMat& lineality() const { return lineality_; }
    const IMat& facets() const { return facets_; }
    const IMat& equations() const { return equations_; }
    // rays followed by +-lineality vectors
    IMat generators() const;
    IMat span_basis() const;
    bool is_pointed() const { return lineality_.empty(); }
    bool is_zero() const { return dim() == 0; }
    bool is_linear() const { return rays_.empty(); }

    bool contains(const QVec& x) const;
    bool contains(const IVec& x) const { return contains(to_q(x)); }
    bool contains_in_relint(const QVec& x) const;
    bool contains_in_relint(const IVec& x) const { return contains_in_relint(to_q(x)); }
    bool in_span(const QVec& x) const;
    bool contains(const Cone& other) const;  // other is a subset
    QVec relint_point() const;

    bool operator==(const Cone& o) const {
        return n_ == o.n_ && lineality_ == o.lineality_ && rays_ == o.rays_;
    }
    bool operator!=(const Cone& o) const { return !(*this == o); }
    // Deterministic total order: dimension descending, then rays, then lineality.
    bool operator<(const Cone& o) const;

private:
    std::size_t n_ = 0;
    IMat lineality_, rays_, facets_, equations_;
};

Cone intersect(const Cone& a, const Cone& b);
// Full face lattice including a itself and the minimal face, sorted by the
// cone order.
std::vector<Cone> faces(const Cone& a);
std::vector<Cone> facets_of(const Cone& a);
bool is_face(const Cone& f, const Cone& a);
Cone apply_matrix(const IMat& w, const Cone& a);
bool interiors_intersect(const Cone& a, const Cone& b);
// Cone generated by a and b.
Cone join(const Cone& a, const Cone& b);

// Hilbert basis of the monoid (lattice ∩ a). `lattice` is a basis of a lattice
// whose Q-span contains a; empty means Z^n. For non-pointed cones the result is
// the Hilbert basis of the pointed quotient lifted, plus +-a basis of the
// lineality lattice.
IMat hilbert_basis(const Cone& a, const IMat& lattice = {}, std::size_t max_dim = 5);

// Triangulation into simplicial cones (each given by its rays); pointed cones only.
std::vector<IMat> triangulate(const Cone& a);

// Double description: lineality basis and extreme rays of {x : A x >= 0}.
struct DDResult {
    IMat lineality;
    IMat rays;
};
DDResult double_description(std::size_t n, const IMat& ineqs);

}  // namespace redvar
