#pragma once
// Height functions on corpus cones, integral and non-integral.

#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "redvar/degen.hpp"

namespace corpus {

struct HeightEntry {
    std::string type;
    std::string label;
    std::vector<std::vector<long>> sigma;
    std::vector<std::vector<std::string>> pieces;
    bool orbit = false;  // replace pieces by their W-orbits
    bool integral = true;
};

inline const std::vector<HeightEntry>& heights() {
    static const std::vector<HeightEntry> e{
        {"A1", "x on chamber", {{1}}, {{"1"}}, false, true},
        {"A1", "x/3 on chamber", {{1}}, {{"1/3"}}, false, false},
        {"A1", "|x| on line", {{1}, {-1}}, {{"1"}, {"-1"}}, false, true},
        {"A1", "|x|/2 on line", {{1}, {-1}}, {{"1/2"}, {"-1/2"}}, false, false},
        {"A1xA1", "max(x,y)", {{1, 0}, {0, 1}}, {{"1", "0"}, {"0", "1"}}, false, true},
        {"A1xA1", "(x+y)/2", {{1, 0}, {0, 1}}, {{"1/2", "1/2"}}, false, false},
        {"A1xA1", "zero", {{1, 0}, {0, 1}}, {{"0", "0"}}, false, true},
        {"A1xA1", "max(x,y)/2", {{1, 0}, {0, 1}}, {{"1/2", "0"}, {"0", "1/2"}}, false, false},
        {"A1xA1", "|x|+|y| on plane", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{"1", "1"}}, true, true},
        {"A1xA1", "max(x,2y)/5 on wedge", {{1, 0}, {1, 1}}, {{"1/5", "0"}, {"0", "2/5"}}, false, false},
        {"A2", "max(x,y)", {{1, 0}, {0, 1}}, {{"1", "0"}, {"0", "1"}}, false, true},
        {"A2", "(x+2y)/3", {{1, 0}, {0, 1}}, {{"1/3", "2/3"}}, false, false},
        {"A2", "rho orbit on plane", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{"1", "1"}}, true, true},
        {"A2", "rho orbit/2 on plane", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{"1/2", "1/2"}}, true, false},
        {"B2", "max(2x, x+y)", {{1, 0}, {0, 1}}, {{"2", "0"}, {"1", "1"}}, false, true},
        {"B2", "w2 orbit/6 on plane", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{"1/6", "1/6"}}, true, false},
    };
    return e;
}

inline redvar::HeightFunction make_height(const redvar::GroupData& G, const HeightEntry& e) {
    using namespace redvar;
    HeightFunction h{Cone::from_generators(G.rank(), to_imat(e.sigma)), {}};
    std::set<QVec> pieces;
    for (const auto& p : e.pieces) {
        QVec l;
        for (const auto& s : p) l.emplace_back(s);
        if (!e.orbit) {
            pieces.insert(l);
            continue;
        }
        for (const auto& w : G.weyl().elements()) {
            QVec lw(l.size(), 0);
            for (std::size_t j = 0; j < l.size(); ++j)
                for (std::size_t i = 0; i < l.size(); ++i) lw[j] += l[i] * Rat(w[i][j]);
            pieces.insert(lw);
        }
    }
    h.pieces.assign(pieces.begin(), pieces.end());
    return h;
}

}  // namespace corpus
