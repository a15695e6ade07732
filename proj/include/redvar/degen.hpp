#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redvar/algebra.hpp"
#include "redvar/complexes.hpp"

namespace redvar {

// h(x) = max_i <pieces[i], x> on sigma.
struct HeightFunction {
    Cone sigma;
    std::vector<QVec> pieces;
    Rat operator()(const QVec& x) const;
    Rat operator()(const IVec& x) const { return (*this)(to_q(x)); }
};

struct HeightReport {
    bool valid = true;
    std::string message;
    std::optional<std::size_t> witness;  // Weyl element breaking invariance
};
HeightReport validate_height(const GroupData& G, const HeightFunction& h);

// Full-dimensional linearity domains sigma ∩ {l_i >= l_j}, distinct, sorted.
std::vector<Cone> linearity_domains(const HeightFunction& h);
WComplex subdivision(const GroupData& G, const HeightFunction& h);

// Datum of G x G_m: the last coordinate is fixed by W.
RootDatum extended_datum(const RootDatum& rd);
// {(x, y) : x in sigma, y >= h(x)}; throws NotAdmissibleLift if not admissible for the extended datum.
Cone lifted_cone(const GroupData& G, const HeightFunction& h);

struct ReducedReport {
    bool reduced = true;
    std::optional<Weight> witness;  // Hilbert basis element with h not integral
};
ReducedReport special_fiber_reduced(const GroupData& G, const HeightFunction& h);

struct NilpotentWitness {
    Weight lambda;
    Int power;
};
std::optional<NilpotentWitness> nilpotent_witness(const GroupData& G, const HeightFunction& h);

// Level-K character ring of the special fiber with the floor rule on heights.
struct SpecialFiber {
    WComplex complex;   // Sigma_h, trivial cocycle
    ContextPtr ctx;
    HeightFunction h;
};
SpecialFiber special_fiber(GroupPtr G, const HeightFunction& h, const IVec& gamma, const Int& N);
WeightMap fiber_product(const SpecialFiber& sf, const WeightMap& x, const WeightMap& y);
// Highest-weight monomials f_lambda: f_l f_m = f_{l+m} if floors add, else 0.
bool monomial_product_nonzero(const HeightFunction& h, const Weight& l, const Weight& m);
// Least m <= max_power with f_lambda^m = 0.
std::optional<Int> monomial_nilpotency(const HeightFunction& h, const Weight& lambda, long max_power);

struct GammaEntry {
    std::size_t face;
    std::size_t cone1, cone2;
    IVec values;  // on the Hermite basis of Lambda ∩ lin(face)
};
struct HeightSystem {
    WComplex complex;
    std::map<std::size_t, HeightFunction> heights;  // maximal cell -> height
    std::vector<GammaEntry> gamma;
};
HeightReport validate_height_system(const GroupData& G, const HeightSystem& hs);

}  // namespace redvar
