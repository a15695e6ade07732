#pragma once

#include <string>
#include <utility>
#include <vector>

#include "redvar/algebra.hpp"

namespace redvar {

// Fiber of the Vinberg family over a point of A^Pi with the given vanishing coordinates.
struct VinbergFiber {
    RootSet zeros;
    RootSet level;  // simple roots with <alpha, gamma> = 0, i.e. Pi minus zeros
    IVec gamma;     // dominant, primitive; zero at the generic point
    Cone sigma;     // reconstruct_sigma(Lambda^+_R, level)
    ContextPtr ctx; // level-K product, truncated by the regular grading
};
VinbergFiber vinberg_fiber(GroupPtr G, const RootSet& zeros, const Int& N);

// Regular truncation grading: 1 on every fundamental weight.
IVec regular_grading(const RootDatum& rd);

// Both readings of the zero pattern, tested on the generic point and the origin.
struct ParametrizationRow {
    std::string name;
    RootSet generic_level, origin_level;
    bool generic_is_group = false;  // full tensor product table, sigma = Lambda_R
    bool origin_is_popov = false;   // agrees with gr for a regular dominant gamma
};
struct VinbergCrossCheck {
    std::vector<ParametrizationRow> rows;
    std::string resolution;
};
VinbergCrossCheck vinberg_cross_check(GroupPtr G, const Int& N);

// Pairs (mu, lambda) with lambda dominant, lambda <=_Pi mu and <mu, gamma> <= N.
struct VinbergSupport {
    std::vector<std::pair<Weight, Weight>> pairs;
    std::size_t products_checked = 0;
    bool closed = true;
    std::string violation;
};
// gamma must be strictly positive on the simple roots and on the dominant chamber.
VinbergSupport vinberg_ring_support(GroupPtr G, const IVec& gamma, const Int& N);

bool dominated_by(const RootDatum& rd, const Weight& lambda, const Weight& mu, const RootSet& K);

// gr_gamma of X_sigma for gamma orthogonal exactly to Pi minus zeros.
struct XStarVFiber {
    RootSet level;  // K_sigma minus zeros
    Cone sigma;
    ContextPtr ctx;
};
XStarVFiber x_star_v_fiber(GroupPtr G, const Cone& sigma, const RootSet& zeros, const Int& N);

}  // namespace redvar
