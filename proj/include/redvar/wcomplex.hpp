#pragma once

#include <string>
#include <vector>

#include "redvar/group.hpp"

namespace redvar {

struct WCell {
    std::string id;
    Cone cone;                        // realization
    std::vector<std::size_t> faces;   // indices of all proper faces
};

// Abstract cone complex with a W-action and a reference map into Lambda_R.
class WComplex {
public:
    std::vector<WCell> cells;
    // action[i][c]: index of s_i . c for the simple reflection s_i
    std::vector<std::vector<std::size_t>> action;

    std::size_t size() const { return cells.size(); }
    std::size_t index(const std::string& id) const;  // size() if absent
    bool is_face_of(std::size_t f, std::size_t c) const;  // f == c or proper face
    // Action of the Weyl element with the given index, via its reduced word.
    std::size_t act(const WeylGroup& W, std::size_t w, std::size_t c) const;
    // W-orbits of cells; each orbit sorted, orbits ordered by first member.
    std::vector<std::vector<std::size_t>> orbits() const;
    std::vector<std::size_t> maximal_cells() const;
};

// All W-translates of the given cones and their faces, realised by inclusion.
WComplex complex_from_cones(const GroupData& G, const std::vector<Cone>& cones);

}  // namespace redvar
