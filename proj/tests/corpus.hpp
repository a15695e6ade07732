#pragma once
// Hand-written W-admissible cones over A1, A1xA1, A2, B2 (fundamental-weight
// coordinates). Shared by unit and acceptance tests.

#include <string>
#include <vector>

#include "redvar/arith.hpp"

namespace corpus {

struct Entry {
    std::string type;
    std::string label;
    std::vector<std::vector<long>> gens;
};

inline const std::vector<Entry>& admissible_cones() {
    static const std::vector<Entry> e{
        {"A1", "chamber", {{1}}},
        {"A1", "line", {{1}, {-1}}},
        {"A1", "zero", {}},
        {"A1xA1", "chamber", {{1, 0}, {0, 1}}},
        {"A1xA1", "upper half", {{1, 0}, {-1, 0}, {0, 1}}},
        {"A1xA1", "right half", {{0, 1}, {0, -1}, {1, 0}}},
        {"A1xA1", "plane", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}},
        {"A1xA1", "ray w1", {{1, 0}}},
        {"A1xA1", "axis w1", {{1, 0}, {-1, 0}}},
        {"A1xA1", "ray w2", {{0, 1}}},
        {"A1xA1", "axis w2", {{0, 1}, {0, -1}}},
        {"A1xA1", "zero", {}},
        {"A1xA1", "wedge", {{1, 0}, {1, 1}}},
        {"A1xA1", "x >= |y|", {{1, 1}, {1, -1}}},
        {"A2", "chamber", {{1, 0}, {0, 1}}},
        {"A2", "W_a1 chamber", {{1, 0}, {-1, 1}}},
        {"A2", "W_a2 chamber", {{0, 1}, {1, -1}}},
        {"A2", "plane", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}},
        {"A2", "ray w1", {{1, 0}}},
        {"A2", "ray w2", {{0, 1}}},
        {"A2", "zero", {}},
        {"A2", "wedge", {{1, 0}, {1, 1}}},
        {"B2", "chamber", {{1, 0}, {0, 1}}},
        {"B2", "W_a1 chamber", {{1, 0}, {-1, 2}}},
        {"B2", "W_a2 chamber", {{0, 1}, {1, -1}}},
        {"B2", "plane", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}},
        {"B2", "ray w1", {{1, 0}}},
        {"B2", "ray w2", {{0, 1}}},
        {"B2", "zero", {}},
    };
    return e;
}

inline redvar::IMat to_imat(const std::vector<std::vector<long>>& g) {
    redvar::IMat m;
    for (const auto& v : g) {
        redvar::IVec r;
        for (long x : v) r.emplace_back(x);
        m.push_back(r);
    }
    return m;
}

inline std::size_t rank_of(const std::string& type) { return type == "A1" ? 1 : 2; }

}  // namespace corpus
