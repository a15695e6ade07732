#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "redvar/admissible.hpp"
#include "redvar/complexes.hpp"
#include "redvar/repthy.hpp"

namespace redvar {

// Truncated character ring: basis chi_{lambda,K} for lambda in Lambda^+ ∩ sigma with <lambda, gamma> <= N.
struct CharContext {
    GroupPtr group;
    Cone sigma;
    RootSet K;
    IVec gamma;
    Int N;
    bool operator==(const CharContext& o) const {
        return group->rd() == o.group->rd() && sigma == o.sigma && K == o.K && gamma == o.gamma && N == o.N;
    }
};
using ContextPtr = std::shared_ptr<const CharContext>;

// Builds a context for an admissible cone; gamma must be positive on (Lambda^+ ∩ sigma) minus 0.
ContextPtr make_context(GroupPtr G, const Cone& sigma, const IVec& gamma, const Int& N);
ContextPtr make_context(GroupPtr G, const Cone& sigma, const RootSet& K, const IVec& gamma, const Int& N);

struct CharElement {
    ContextPtr ctx;
    WeightMap coeffs;
    static CharElement basis(ContextPtr ctx, const Weight& lambda);
    bool operator==(const CharElement& o) const { return *ctx == *o.ctx && coeffs == o.coeffs; }
};

Int degree(const CharContext& ctx, const Weight& lambda);
// Lambda^+ ∩ sigma up to degree N, sorted.
std::vector<Weight> enumerate_basis(const CharContext& ctx);

CharElement char_product(const CharElement& x, const CharElement& y);
// Product without truncation.
WeightMap full_product(const CharContext& ctx, const WeightMap& x, const WeightMap& y);
WeightMap truncate(const CharContext& ctx, const WeightMap& x);

std::map<Int, Int> hilbert_function(const CharContext& ctx);
// Same, for a monoid given by generators; rejects monoids not saturated in Lambda.
std::map<Int, Int> hilbert_function_monoid(GroupPtr G, const IMat& gens, const IVec& gamma, const Int& N);
std::map<Int, Int> submonoid_hilbert(const CharContext& ctx);

// Exhaustive (x y) z = x (y z) over basis triples, truncating only the final result.
bool associativity_check(const CharContext& ctx, Exec exec = Exec::Parallel);

// lambda -> value group element, written additively.
using ScalarSystem = std::function<IVec(const Weight&)>;
bool semigroup_scalar_check(const CharContext& ctx, const ValueGroup& vg, const ScalarSystem& c);
bool scalar_torsor_check(const CharContext& ctx, const ValueGroup& vg, const ScalarSystem& c, const ScalarSystem& c2);

struct IdempotentFace {
    Cone face;
    std::size_t orbit_class;
};
std::vector<IdempotentFace> idempotent_faces(const GroupData& G, const AdmissibleCone& ac);

// K = {alpha in Pi : <alpha, gamma> = 0}; gamma must be dominant.
RootSet graded_degeneration_support(const RootDatum& rd, const IVec& gamma);

struct Sl2Report {
    bool ok = true;
    std::size_t pairs_checked = 0;
    std::string mismatch;
};
// Explicit model of k[SL2]: compares products of matrix-coefficient spaces with the level-K supports.
Sl2Report sl2_oracle(int N);

}  // namespace redvar
