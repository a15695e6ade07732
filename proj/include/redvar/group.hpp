#pragma once

#include <memory>

#include "redvar/cone.hpp"
#include "redvar/root_datum.hpp"

namespace redvar {

// A root datum together with its Weyl group and dominant chamber.
class GroupData {
public:
    explicit GroupData(RootDatum rd, Caps caps = {})
        : rd_(std::move(rd)), caps_(caps), weyl_(rd_, caps.weyl_order), chamber_(dominant_chamber(rd_)) {}

    const RootDatum& rd() const { return rd_; }
    const WeylGroup& weyl() const { return weyl_; }
    const Cone& chamber() const { return chamber_; }
    const Caps& caps() const { return caps_; }
    std::size_t rank() const { return rd_.rank(); }

    // Does the relative interior of c meet the dominant chamber?
    bool meets_chamber(const Cone& c) const;
    // First w (in Weyl order) with relint(w c) meeting the chamber.
    std::size_t canonical_translate(const Cone& c) const;
    // {w : w c = c}
    std::vector<std::size_t> stabilizer(const Cone& c) const;

private:
    RootDatum rd_;
    Caps caps_;
    WeylGroup weyl_;
    Cone chamber_;
};

using GroupPtr = std::shared_ptr<const GroupData>;

inline GroupPtr make_group(const std::string& type, Caps caps = caps_from_env()) {
    return std::make_shared<const GroupData>(build_root_datum(type), caps);
}

}  // namespace redvar
