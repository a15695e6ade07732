#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "redvar/error.hpp"
#include "redvar/repthy.hpp"

using namespace redvar;
using oracle::dominant_box;
using oracle::tensor_oracle;

namespace {

// Weyl character formula check: A_{lambda+rho} = chi_lambda * A_rho, with rho = (1,...,1).
bool weyl_character_identity(const RootDatum& rd, const Weight& lambda, const WeightMap& chi) {
    WeylGroup W(rd);
    Weight rho(rd.rank(), 1);
    std::map<Weight, Int> lhs, rhs;
    for (std::size_t w = 0; w < W.size(); ++w) {
        lhs[mat_vec(W.element(w), add(lambda, rho))] += W.sign(w);
        Weight wr = mat_vec(W.element(w), rho);
        for (const auto& [x, m] : chi) rhs[add(x, wr)] += W.sign(w) * m;
    }
    auto clean = [](std::map<Weight, Int>& m) {
        for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
    };
    clean(lhs);
    clean(rhs);
    return lhs == rhs;
}

}  // namespace

TEST_CASE("weight multiplicities examples") {
    auto a1 = build_root_datum("A1");
    CHECK(*weight_multiplicities(a1, ivec({2})) == WeightMap{{ivec({-2}), 1}, {ivec({0}), 1}, {ivec({2}), 1}});
    auto a2 = build_root_datum("A2");
    auto adj = weight_multiplicities(a2, ivec({1, 1}));
    CHECK(adj->at(ivec({0, 0})) == 2);
    Int total = 0;
    for (const auto& [x, m] : *adj) total += m;
    CHECK(total == 8);
    CHECK(*weight_multiplicities(a2, ivec({0, 0})) == WeightMap{{ivec({0, 0}), 1}});
    CHECK_THROWS_AS(weight_multiplicities(a2, ivec({-1, 0})), Error);
    Caps small;
    small.rep_dim = 5;
    CHECK_THROWS_AS(weight_multiplicities(a2, ivec({1, 1}), small), Error);
}

TEST_CASE("weyl dimension") {
    auto a1 = build_root_datum("A1");
    for (long n = 0; n < 10; ++n) CHECK(weyl_dim(a1, ivec({n})) == n + 1);
    auto a2 = build_root_datum("A2");
    CHECK(weyl_dim(a2, ivec({1, 0})) == 3);
    CHECK(weyl_dim(a2, ivec({1, 1})) == 8);
    CHECK(weyl_dim(build_root_datum("G2"), ivec({1, 0})) == 7);
    CHECK(weyl_dim(build_root_datum("B2"), ivec({1, 0})) == 5);
    CHECK(weyl_dim(build_root_datum("GL2"), ivec({1, 0})) == 2);
}

TEST_CASE("freudenthal agrees with the Weyl character formula") {
    for (const char* t : {"A1", "A2", "B2", "C2", "G2", "A1xA1"}) {
        auto rd = build_root_datum(t);
        for (const auto& l : dominant_box(rd.rank(), 3)) {
            CAPTURE(t);
            CAPTURE(to_string(l));
            auto chi = weight_multiplicities(rd, l);
            CHECK(weyl_character_identity(rd, l, *chi));
            Int total = 0;
            for (const auto& [x, m] : *chi) {
                total += m;
                CHECK(m == chi->at(dominant_conjugate(rd, x)));
            }
            CHECK(total == weyl_dim(rd, l));
        }
    }
}

TEST_CASE("tensor products") {
    auto a1 = build_root_datum("A1");
    CHECK(tensor_decompose(a1, ivec({1}), ivec({1})) == WeightMap{{ivec({0}), 1}, {ivec({2}), 1}});
    auto a2 = build_root_datum("A2");
    CHECK(tensor_decompose(a2, ivec({1, 0}), ivec({0, 1})) == WeightMap{{ivec({0, 0}), 1}, {ivec({1, 1}), 1}});
    CHECK(tensor_decompose(a2, ivec({2, 1}), ivec({0, 0})) == WeightMap{{ivec({2, 1}), 1}});
    auto gl2 = build_root_datum("GL2");
    auto g = tensor_decompose(gl2, ivec({1, 0}), ivec({1, 0}));
    CHECK(g.size() == 2);
}

TEST_CASE("tensor sweep against character multiplication") {
    for (const char* t : {"A1", "A2", "B2"}) {
        auto rd = build_root_datum(t);
        auto ws = dominant_box(rd.rank(), rd.rank() == 1 ? 12 : 3);
        for (const auto& l : ws)
            for (const auto& m : ws) {
                if (weyl_dim(rd, l) > 200 || weyl_dim(rd, m) > 200) continue;
                CAPTURE(t);
                CAPTURE(to_string(l));
                CAPTURE(to_string(m));
                auto d = tensor_decompose(rd, l, m, Exec::Parallel);
                CHECK(d == tensor_decompose(rd, l, m, Exec::Serial));
                CHECK(d == tensor_oracle(rd, l, m));
                Int sum = 0;
                for (const auto& [nu, c] : d) {
                    sum += c * weyl_dim(rd, nu);
                    CHECK(dominance_le(rd, nu, add(l, m), rd.all_roots()));
                }
                CHECK(sum == weyl_dim(rd, l) * weyl_dim(rd, m));
            }
    }
}

TEST_CASE("levi truncation") {
    auto a1 = build_root_datum("A1");
    CHECK(levi_truncation(a1, ivec({2}), {0}).size() == 3);
    CHECK(levi_truncation(a1, ivec({2}), {}) == WeightMap{{ivec({2}), 1}});
    auto a2 = build_root_datum("A2");
    CHECK(levi_truncation(a2, ivec({1, 0}), {0}) == WeightMap{{ivec({1, 0}), 1}, {ivec({-1, 1}), 1}});
    for (const auto& l : dominant_box(2, 3)) {
        CHECK(levi_truncation(a2, l, {0, 1}) == *weight_multiplicities(a2, l));
        for (RootSet K : {RootSet{}, RootSet{0}, RootSet{1}}) {
            auto v = levi_truncation(a2, l, K);
            for (const auto& [x, m] : v)
                for (auto k : K) CHECK(v.count(a2.reflect(x, k)));
        }
    }
}

TEST_CASE("level K supports") {
    auto a1 = build_root_datum("A1");
    CHECK(product_support_levelK(a1, ivec({1}), ivec({1}), {0}).size() == 2);
    CHECK(product_support_levelK(a1, ivec({1}), ivec({1}), {}) == WeightMap{{ivec({2}), 1}});
    auto a2 = build_root_datum("A2");
    CHECK(product_support_levelK(a2, ivec({1, 0}), ivec({0, 1}), {0}) == WeightMap{{ivec({1, 1}), 1}});
    for (const auto& l : dominant_box(2, 2))
        for (const auto& m : dominant_box(2, 2)) {
            auto full = product_support_levelK(a2, l, m, {0, 1});
            CHECK(full == tensor_decompose(a2, l, m));
            auto one = product_support_levelK(a2, l, m, {0});
            auto none = product_support_levelK(a2, l, m, {});
            for (const auto& [nu, c] : one) CHECK(full.count(nu));
            for (const auto& [nu, c] : none) CHECK(one.count(nu));
        }
}

TEST_CASE("transvectants") {
    auto a1 = build_root_datum("A1");
    CHECK(transvectant_check(a1, ivec({1}), 0, {0}));
    auto a2 = build_root_datum("A2");
    CHECK(transvectant_check(a2, ivec({1, 0}), 0, {0}));
    CHECK_THROWS_AS(transvectant_check(a2, ivec({0, 1}), 0, {0}), Error);
}
