#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redvar/admissible.hpp"
#include "redvar/wcomplex.hpp"

namespace redvar {

struct ValidationReport {
    bool valid = true;
    int axiom = 0;  // first violated axiom, 1..4
    std::string message;
};
ValidationReport validate_complex(const GroupData& G, const WComplex& wc);

// Realizations of distinct cells meet only in realizations of common faces.
bool rho_injective(const WComplex& wc);

std::vector<std::size_t> irreducible_components(const GroupData& G, const WComplex& wc);

struct CellClass {
    std::vector<std::size_t> members;
    std::size_t rep = 0;               // member meeting the dominant chamber
    std::optional<Invariant> inv;      // absent when the translate is not admissible
    std::size_t dim = 0;               // cone dimension
    AbelianGroup characters;           // (Lambda ∩ lin) / relations
};
std::vector<CellClass> orbit_classes(const GroupData& G, const WComplex& wc);

// Finitely generated abelian group of formal symbols; order 0 means free.
struct ValueGroup {
    std::vector<std::string> symbols;
    std::vector<Int> orders;
    IVec reduce(IVec v) const;
    bool is_identity(const IVec& v) const;
};

struct CocycleEntry {
    std::size_t face = 0;
    std::size_t cone = 0;
    IMat values;  // row j: value of the j-th coordinate character
};
struct Cocycle {
    ValueGroup vg;
    std::vector<CocycleEntry> entries;
};

// Chains tau_0 < ... < tau_n modulo W with coefficients in M_{tau_0}.
struct ChainTerm {
    std::vector<std::vector<std::size_t>> chains;  // orbit representatives
    std::vector<IMat> bases;                       // basis of Lambda ∩ lin tau_0
    std::vector<std::size_t> offsets;
    std::size_t rank = 0;
    IMat relations;                                // rows in F_n coordinates
    AbelianGroup group;
};
struct AutChainComplex {
    std::vector<ChainTerm> terms;    // degrees 0, 1, 2
    std::vector<IMat> boundary;      // boundary[n]: F_n -> F_{n-1}, rows are images; boundary[0] empty
    std::vector<IMat> cell_relations;  // per cell, relation lattice generators
};
AutChainComplex aut_chain_complex(const GroupData& G, const WComplex& wc);
// Relations of M_c inside Lambda ∩ lin c: ZK of the dominant translate and stabilizer coinvariants.
IMat cell_relation_generators(const GroupData& G, const WComplex& wc, std::size_t c);

struct Cohomology {
    AbelianGroup H0;
    AbelianGroup H1;
    IMat cycles;  // Hermite basis of 1-chains whose boundary is a relation
};
Cohomology cohomology(const GroupData& G, const WComplex& wc);
Cohomology cohomology(const AutChainComplex& cx);

// Values of the cocycle on the cycle basis, reduced in the value group.
std::vector<IVec> cocycle_class(const GroupData& G, const WComplex& wc, const Cocycle& t);
bool is_coboundary(const GroupData& G, const WComplex& wc, const Cocycle& t);
bool semigroup_admissible(const GroupData& G, const WComplex& wc, const Cocycle& t);

// Coboundary of a 0-cochain; s[c] gives the value of each coordinate character on cell c.
Cocycle coboundary(const WComplex& wc, const ValueGroup& vg, const std::vector<IMat>& s);

}  // namespace redvar
