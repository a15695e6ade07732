#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "redvar/exec.hpp"
#include "redvar/group.hpp"
#include "redvar/linalg.hpp"
#include "redvar/wcomplex.hpp"

namespace redvar {

struct AdmissibilityResult {
    bool admissible = false;
    int failed_condition = 0;           // 0, 1 or 2
    std::optional<std::size_t> witness; // Weyl element index for condition 2
    std::string reason;
};

AdmissibilityResult is_w_admissible(const GroupData& G, const Cone& sigma, Exec exec = Exec::Parallel);
// Smallest w with w sigma != sigma and overlapping relative interiors.
std::optional<std::size_t> overlapping_translate(const GroupData& G, const Cone& sigma, Exec exec);

// K_sigma: simple roots whose wall meets relint(sigma) and which are not
// identically zero on sigma.
RootSet root_set_of(const GroupData& G, const Cone& sigma);
std::pair<Cone, RootSet> cone_invariants(const GroupData& G, const Cone& sigma);

struct PairCheck {
    bool in_chamber = false;
    bool cond1 = false;  // K inside lin C
    bool cond2 = false;  // C cut out by chamber walls and covectors <= 0 on K
    bool ok() const { return in_chamber && cond1 && cond2; }
};
PairCheck check_pair(const GroupData& G, const Cone& C, const RootSet& K);
Cone reconstruct_sigma(const GroupData& G, const Cone& C, const RootSet& K);

struct Invariant {
    RootSet K;
    IMat lambda_prime;  // Hermite basis
    RootSet J;
    bool operator==(const Invariant&) const = default;
};

struct AdmissibleCone {
    Cone sigma;
    Cone C;
    RootSet K;
    static AdmissibleCone make(const GroupData& G, const Cone& sigma);
};

Invariant isotropy_invariant(const GroupData& G, const AdmissibleCone& ac);
std::size_t orbit_dimension(const GroupData& G, const Invariant& inv);
AbelianGroup aut_group(const GroupData& G, const AdmissibleCone& ac);
// (Lambda ∩ lin sigma) modulo the coinvariant relations x - w x, w in Stab_W(sigma).
AbelianGroup aut_group_toric(const GroupData& G, const Cone& sigma);
bool quasiaffine_check(const GroupData& G, const Invariant& inv);

struct OrbitClass {
    Cone rep;
    std::vector<Cone> members;  // faces of sigma in this class
    Invariant inv;
    std::size_t dim = 0;
    AbelianGroup aut;
};
struct OrbitPoset {
    std::vector<OrbitClass> classes;              // sorted by cone order of rep
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (smaller, larger)
};
OrbitPoset orbit_poset(const GroupData& G, const AdmissibleCone& ac);

std::pair<RootSet, RootSet> fixedpoint_groups(const Invariant& inv);

WComplex toric_side(const GroupData& G, const AdmissibleCone& ac);

// Monoid generated by gens saturated in its own integer span (Lambda_X sense).
bool is_saturated_in_lattice(const IMat& gens, std::size_t n);
// Monoid generated by gens equal to its cone intersected with Z^n (Lambda sense).
bool is_saturated_in_ambient(const IMat& gens, std::size_t n);

}  // namespace redvar
