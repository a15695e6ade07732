#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "redvar/arith.hpp"
#include "redvar/cone.hpp"

namespace redvar {

using Weight = IVec;
using RootSet = std::vector<std::size_t>;  // indices into the simple roots, ascending

struct Caps {
    std::size_t weyl_order = 40320;
    std::size_t rep_dim = 1000000;
    std::size_t hilbert_dim = 5;
};
Caps caps_from_env();

class RootDatum {
public:
    RootDatum(std::size_t rank, IMat simple_roots, IMat simple_coroots, std::string name = "");

    std::size_t rank() const { return rank_; }
    std::size_t semisimple_rank() const { return roots_.size(); }
    const IMat& simple_roots() const { return roots_; }
    const IMat& simple_coroots() const { return coroots_; }
    const IMat& cartan() const { return cartan_; }  // cartan()[i][j] = <alpha_i, alpha_j^vee>
    const std::string& name() const { return name_; }
    std::string root_name(std::size_t i) const { return "a" + std::to_string(i + 1); }
    RootSet all_roots() const;

    Int pairing(const IVec& x, std::size_t i) const { return dot(x, coroots_[i]); }
    Rat pairing(const QVec& x, std::size_t i) const { return dot(coroots_[i], x); }
    bool is_dominant(const Weight& x) const;
    // s_i(x) = x - <x, alpha_i^vee> alpha_i
    Weight reflect(const Weight& x, std::size_t i) const;
    IMat reflection_matrix(std::size_t i) const;

    // Positive roots ordered by height, then lexicographically on root coordinates.
    const std::vector<Weight>& positive_roots() const { return pos_roots_; }
    // Coordinates of the positive roots in the simple-root basis.
    const std::vector<IVec>& positive_root_coords() const { return pos_coords_; }
    // Coroots of the positive roots, as covectors.
    const std::vector<IVec>& positive_coroots() const { return pos_coroots_; }
    // (alpha_i, alpha_i)/2 for a W-invariant form, normalised so the minimum is 1
    // on each irreducible component.
    const QVec& root_norms() const { return norms_; }

    // Coordinates of x in the basis of simple roots, if x lies in their Q-span.
    bool root_coords(const Weight& x, QVec& out) const;

    // Covector with <alpha_j, gamma> = t_j, lying in the span of the simple coroots.
    QVec coweight_with_values(const QVec& t) const;

    bool operator==(const RootDatum& o) const {
        return rank_ == o.rank_ && roots_ == o.roots_ && coroots_ == o.coroots_;
    }

private:
    void validate() const;
    void build_positive_roots();

    std::size_t rank_;
    IMat roots_, coroots_, cartan_;
    std::string name_;
    std::vector<Weight> pos_roots_;
    std::vector<IVec> pos_coords_, pos_coroots_;
    QVec norms_;
};

// "A2", "B3", "C2", "D4", "G2", "A1xA1", "GL3", "T1", "A2xT1", ...
RootDatum build_root_datum(const std::string& type);
RootDatum build_root_datum(std::size_t rank, const IMat& simple_roots, const IMat& simple_coroots);

bool dominance_le(const RootDatum& rd, const Weight& nu, const Weight& lambda, const RootSet& K);

Cone dominant_chamber(const RootDatum& rd);

class WeylGroup {
public:
    WeylGroup(const RootDatum& rd, std::size_t cap = 40320);

    std::size_t size() const { return elements_.size(); }
    const std::vector<IMat>& elements() const { return elements_; }
    const IMat& element(std::size_t i) const { return elements_[i]; }
    std::size_t length(std::size_t i) const { return words_[i].size(); }
    // Reduced word: element = s_{w[0]} s_{w[1]} ... s_{w[k-1]}.
    const std::vector<std::size_t>& word(std::size_t i) const { return words_[i]; }
    std::size_t index_of(const IMat& m) const;  // size() if absent
    std::size_t simple_reflection_index(std::size_t i) const { return simple_idx_[i]; }
    std::size_t identity_index() const { return 0; }
    // Elements generated by the simple reflections in S.
    std::vector<std::size_t> parabolic(const RootSet& S) const;
    int sign(std::size_t i) const { return words_[i].size() % 2 ? -1 : 1; }

private:
    std::vector<IMat> elements_;
    std::vector<std::vector<std::size_t>> words_;
    std::vector<std::size_t> simple_idx_;
};

Weight w_apply(const IMat& w, const Weight& x);
QVec w_apply(const IMat& w, const QVec& x);

}  // namespace redvar
