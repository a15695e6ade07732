#pragma once

#include <map>
#include <memory>

#include "redvar/exec.hpp"
#include "redvar/root_datum.hpp"

namespace redvar {

using WeightMap = std::map<Weight, Int>;

Int weyl_dim(const RootDatum& rd, const Weight& lambda);
// Dominant conjugate of x.
Weight dominant_conjugate(const RootDatum& rd, Weight x);
// W-orbit of x, sorted.
std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& x);

// Freudenthal recursion; results are memoized in a mutex-guarded cache.
std::shared_ptr<const WeightMap> weight_multiplicities(const RootDatum& rd, const Weight& lambda,
                                                       const Caps& caps = caps_from_env());
// Brauer-Klimyk.
WeightMap tensor_decompose(const RootDatum& rd, const Weight& lambda, const Weight& mu, Exec exec = Exec::Parallel,
                           const Caps& caps = caps_from_env());
WeightMap levi_truncation(const RootDatum& rd, const Weight& lambda, const RootSet& K,
                          const Caps& caps = caps_from_env());
WeightMap product_support_levelK(const RootDatum& rd, const Weight& lambda, const Weight& mu, const RootSet& K,
                                 const Caps& caps = caps_from_env());
bool transvectant_check(const RootDatum& rd, const Weight& lambda, std::size_t alpha, const RootSet& K,
                        const Caps& caps = caps_from_env());

}  // namespace redvar
