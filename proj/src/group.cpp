#include "redvar/group.hpp"

namespace redvar {

bool GroupData::meets_chamber(const Cone& c) const {
    Cone m = intersect(c, chamber_);
    return c.contains_in_relint(m.relint_point());
}

std::size_t GroupData::canonical_translate(const Cone& c) const {
    for (std::size_t w = 0; w < weyl_.size(); ++w)
        if (meets_chamber(apply_matrix(weyl_.element(w), c))) return w;
    return weyl_.size();
}

std::vector<std::size_t> GroupData::stabilizer(const Cone& c) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < weyl_.size(); ++w)
        if (apply_matrix(weyl_.element(w), c) == c) out.push_back(w);
    return out;
}

}  // namespace redvar
