#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "redvar/error.hpp"
#include "redvar/vinberg.hpp"

using namespace redvar;

namespace {

std::vector<RootSet> subsets_of(std::size_t n) {
    std::vector<RootSet> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        RootSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("generic fiber is the group") {
    for (const char* type : {"A1", "A1xA1", "A2", "B2"}) {
        CAPTURE(type);
        auto G = make_group(type);
        auto f = vinberg_fiber(G, {}, 6);
        CHECK(is_zero(f.gamma));
        CHECK(f.sigma == Cone::full(G->rank()));
        CHECK(f.level == G->rd().all_roots());
        auto basis = enumerate_basis(*f.ctx);
        for (const auto& l : basis)
            for (const auto& m : basis) {
                WeightMap expect;
                for (const auto& [nu, c] : tensor_decompose(G->rd(), l, m, Exec::Serial))
                    if (degree(*f.ctx, nu) <= 6) expect[nu] = c;
                auto got = char_product(CharElement::basis(f.ctx, l), CharElement::basis(f.ctx, m));
                CHECK(got.coeffs == expect);
            }
    }
}

TEST_CASE("fibers over every zero pattern") {
    for (const char* type : {"A1", "A1xA1", "A2", "B2"}) {
        auto G = make_group(type);
        const auto& rd = G->rd();
        for (const auto& Z : subsets_of(rd.semisimple_rank())) {
            auto f = vinberg_fiber(G, Z, 4);
            CAPTURE(type);
            CAPTURE(Z.size());
            CHECK(is_w_admissible(*G, f.sigma, Exec::Serial).admissible);
            auto [C, K] = cone_invariants(*G, f.sigma);
            CHECK(C == G->chamber());
            CHECK(K == f.level);
            CHECK(f.level.size() + Z.size() == rd.semisimple_rank());
            for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
                Int p = dot(rd.simple_roots()[i], f.gamma);
                CHECK(p >= 0);
                CHECK((p > 0) == (std::count(Z.begin(), Z.end(), i) > 0));
            }
        }
        auto origin = vinberg_fiber(G, rd.all_roots(), 4);
        CHECK(origin.level.empty());
        CHECK(origin.sigma == G->chamber());
    }
    CHECK_THROWS_AS(vinberg_fiber(make_group("A1"), {3}, 4), Error);
}

TEST_CASE("zero pattern cross-check on A1") {
    auto rep = vinberg_cross_check(make_group("A1"), 6);
    REQUIRE(rep.rows.size() == 2);
    CHECK_FALSE(rep.rows[0].generic_is_group);
    CHECK_FALSE(rep.rows[0].origin_is_popov);
    CHECK(rep.rows[1].generic_is_group);
    CHECK(rep.rows[1].origin_is_popov);
    CHECK(rep.resolution == "level = Pi minus zeros");
    CHECK(vinberg_cross_check(make_group("A2"), 4).resolution == "level = Pi minus zeros");
}

TEST_CASE("ring support") {
    auto a1 = make_group("A1");
    auto s = vinberg_ring_support(a1, ivec({1}), 6);
    auto has = [&](const IVec& mu, const IVec& l) {
        return std::find(s.pairs.begin(), s.pairs.end(), std::make_pair(mu, l)) != s.pairs.end();
    };
    CHECK(has(ivec({1}), ivec({1})));
    CHECK_FALSE(has(ivec({1}), ivec({0})));
    CHECK(has(ivec({2}), ivec({0})));
    CHECK(s.closed);
    CHECK_THROWS_AS(vinberg_ring_support(make_group("B2"), ivec({1, 1}), 4), Error);
    CHECK_THROWS_AS(vinberg_ring_support(a1, ivec({-1}), 4), Error);

    for (const char* type : {"A1", "A2"}) {
        auto G = make_group(type);
        const auto& rd = G->rd();
        IVec gamma(rd.rank(), 1);
        for (long N = 0; N <= 6; ++N) {
            auto sup = vinberg_ring_support(G, gamma, N);
            CHECK(sup.closed);
            // invariants: monomials in the simple roots
            std::size_t r0 = 0, expect = 0;
            for (const auto& [mu, l] : sup.pairs) r0 += is_zero(l);
            for (const auto& n : oracle::box(rd.semisimple_rank(), N)) {
                bool ok = true;
                IVec mu(rd.rank(), 0);
                for (std::size_t i = 0; i < n.size(); ++i) {
                    ok = ok && n[i] >= 0;
                    mu = add(mu, scale(rd.simple_roots()[i], n[i]));
                }
                if (ok && dot(mu, gamma) <= N) ++expect;
            }
            CHECK(r0 == expect);
            for (const auto& [mu, l] : sup.pairs) {
                CHECK(rd.is_dominant(l));
                CHECK(dominated_by(rd, l, mu, rd.all_roots()));
            }
        }
    }
}

TEST_CASE("gr of admissible cones") {
    for (const auto& e : corpus::admissible_cones()) {
        auto G = make_group(e.type);
        const auto& rd = G->rd();
        Cone sigma = Cone::from_generators(G->rank(), corpus::to_imat(e.gens));
        auto [C, K] = cone_invariants(*G, sigma);
        CAPTURE(e.type);
        CAPTURE(e.label);
        auto id = x_star_v_fiber(G, sigma, {}, 4);
        CHECK(id.sigma == sigma);
        CHECK(id.level == K);
        for (const auto& Z : subsets_of(rd.semisimple_rank())) {
            XStarVFiber f;
            try {
                f = x_star_v_fiber(G, sigma, Z, 4);
            } catch (const Error&) {
                FAIL_CHECK("degeneration rejected");
                continue;
            }
            CHECK(x_star_v_fiber(G, f.sigma, Z, 4).sigma == f.sigma);
            // against gr for a grading with exactly Z non-orthogonal
            IVec gamma = primitive([&] {
                QVec t(rd.semisimple_rank(), 0);
                for (auto i : Z) t[i] = 1;
                return rd.coweight_with_values(t);
            }());
            RootSet expect;
            auto orth = graded_degeneration_support(rd, is_zero(gamma) ? IVec(rd.rank(), 0) : gamma);
            std::set_intersection(K.begin(), K.end(), orth.begin(), orth.end(), std::back_inserter(expect));
            CHECK(f.level == expect);
            auto orig = make_context(G, sigma, K, IVec(rd.rank(), 1), 4);
            auto basis = enumerate_basis(*f.ctx);
            CHECK(basis == enumerate_basis(*orig));
            for (const auto& l : basis)
                for (const auto& m : basis) {
                    WeightMap graded;
                    for (const auto& [nu, c] : truncate(*orig, full_product(*orig, {{l, 1}}, {{m, 1}})))
                        if (dot(nu, gamma) == dot(add(l, m), gamma)) graded[nu] = c;
                    CHECK(truncate(*f.ctx, full_product(*f.ctx, {{l, 1}}, {{m, 1}})) == graded);
                }
        }
    }
}
