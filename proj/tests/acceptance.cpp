// Acceptance run: one PASS/FAIL line per criterion.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "cli_corpus.hpp"
#include "corpus.hpp"
#include "height_corpus.hpp"
#include "oracles.hpp"
#include "redvar/algebra.hpp"
#include "redvar/complex_io.hpp"
#include "redvar/degen.hpp"
#include "redvar/error.hpp"
#include "redvar/vinberg.hpp"

#ifndef REDVAR_CLI
#error "REDVAR_CLI must name the CLI binary"
#endif

using namespace redvar;

namespace {

// Pinned thresholds.
constexpr double kRoundTripSeconds = 10.0;
constexpr long kMinCorpus = 20;
constexpr long kTensorDimProduct = 400;
constexpr int kSl2Degree = 6;
constexpr long kAlgebraN = 8;
constexpr long kNilpotencyPower = 6;
constexpr long kMinHeights = 10;
constexpr long kVinbergN = 6;
// untruncated intermediate products at N = 8 exceed the default dimension guard in B2
constexpr std::size_t kAlgebraRepDim = 1000000000;

struct Fail {
    std::string msg;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw Fail{msg};
}

Cone cone_of(const corpus::Entry& e) { return Cone::from_generators(corpus::rank_of(e.type), corpus::to_imat(e.gens)); }

std::string wstr(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].get_str();
    return s;
}

std::string ac1() {
    auto t0 = std::chrono::steady_clock::now();
    long n = 0;
    std::set<std::string> types;
    for (const auto& e : corpus::admissible_cones()) {
        GroupData G(build_root_datum(e.type));
        Cone s = cone_of(e);
        require(is_w_admissible(G, s).admissible, e.type + " " + e.label + " not admissible");
        auto [C, K] = cone_invariants(G, s);
        require(reconstruct_sigma(G, C, K) == s, e.type + " " + e.label + " round trip");
        // every face of the chamber and the full translates
        for (const auto& f : faces(G.chamber())) {
            auto [Cf, Kf] = cone_invariants(G, f);
            require(reconstruct_sigma(G, Cf, Kf) == f, e.type + " chamber face round trip");
        }
        ++n;
        types.insert(e.type);
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require(n >= kMinCorpus, "corpus too small");
    require(types.size() == 4, "corpus misses a type");
    require(sec < kRoundTripSeconds, "took " + std::to_string(sec) + " s");
    return std::to_string(n) + " cones, " + std::to_string(sec).substr(0, 5) + " s";
}

std::string ac2() {
    long n = 0;
    for (const auto& e : corpus::admissible_cones()) {
        GroupData G(build_root_datum(e.type));
        auto [C, K] = cone_invariants(G, cone_of(e));
        auto pc = check_pair(G, C, K);
        require(pc.in_chamber && pc.cond1 && pc.cond2, e.type + " " + e.label);
        // condition (1) verbatim: K inside lin C
        for (auto i : K) require(C.in_span(to_q(G.rd().simple_roots()[i])), e.type + " " + e.label + " alpha not in lin C");
        ++n;
    }
    return std::to_string(n) + " pairs";
}

std::string ac3() {
    for (const auto& e : corpus::admissible_cones()) {
        GroupData G(build_root_datum(e.type));
        auto ac = AdmissibleCone::make(G, cone_of(e));
        require(aut_group(G, ac) == aut_group_toric(G, ac.sigma), e.type + " " + e.label);
    }
    GroupData a1(build_root_datum("A1"));
    auto g = aut_group(a1, AdmissibleCone::make(a1, Cone::full(1)));
    require(g.free_rank == 0 && g.torsion == std::vector<Int>{2}, "A1 Lambda_R is not Z/2");
    return "A1 Lambda_R: Z/2";
}

std::vector<Weight> dominant_up_to_dim(const RootDatum& rd, long bound) {
    std::vector<Weight> out, frontier{IVec(rd.rank(), 0)};
    std::set<Weight> seen(frontier.begin(), frontier.end());
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& w : frontier) {
            if (weyl_dim(rd, w) > bound) continue;
            out.push_back(w);
            for (std::size_t i = 0; i < rd.rank(); ++i) {
                Weight v = w;
                v[i] += 1;
                if (seen.insert(v).second) next.push_back(v);
            }
        }
        frontier = next;
    }
    return out;
}

std::string ac4() {
    long pairs = 0;
    for (const char* t : {"A1", "A2", "B2"}) {
        auto rd = build_root_datum(t);
        auto ws = dominant_up_to_dim(rd, kTensorDimProduct);
        for (const auto& l : ws)
            for (const auto& m : ws) {
                Int dl = weyl_dim(rd, l), dm = weyl_dim(rd, m);
                if (dl * dm > kTensorDimProduct) continue;
                auto d = tensor_decompose(rd, l, m, Exec::Parallel);
                std::string where = std::string(t) + " " + wstr(l) + " x " + wstr(m);
                require(d == oracle::tensor_oracle(rd, l, m), where);
                Int sum = 0;
                for (const auto& [nu, c] : d) sum += c * weyl_dim(rd, nu);
                require(sum == dl * dm, where + " dimension");
                ++pairs;
            }
    }
    return std::to_string(pairs) + " pairs";
}

std::string ac5() {
    auto r = sl2_oracle(kSl2Degree);
    require(r.ok, r.mismatch);
    return std::to_string(r.pairs_checked) + " products";
}

std::string ac6() {
    long contexts = 0;
    Caps caps = caps_from_env();
    caps.rep_dim = std::max(caps.rep_dim, kAlgebraRepDim);
    for (const auto& e : corpus::admissible_cones()) {
        auto G = make_group(e.type, caps);
        auto ctx = make_context(G, cone_of(e), regular_grading(G->rd()), kAlgebraN);
        std::string where = e.type + " " + e.label;
        require(associativity_check(*ctx, Exec::Parallel), where + " associativity");
        auto basis = enumerate_basis(*ctx);
        auto unit = CharElement::basis(ctx, IVec(G->rank(), 0));
        for (const auto& l : basis) {
            auto x = CharElement::basis(ctx, l);
            require(char_product(unit, x) == x, where + " unit");
            for (const auto& m : basis) {
                auto y = CharElement::basis(ctx, m);
                require(char_product(x, y) == char_product(y, x), where + " commutativity");
            }
        }
        ++contexts;
    }
    return std::to_string(contexts) + " contexts at N = " + std::to_string(kAlgebraN);
}

ScalarSystem linear(long k) {
    return [k](const Weight& l) { return IVec{l[0] * k}; };
}

std::string ac7() {
    ValueGroup free_z{{"z"}, {Int(0)}}, sign{{"z"}, {Int(2)}};
    for (const auto& e : corpus::admissible_cones()) {
        auto G = make_group(e.type);
        auto ctx = make_context(G, cone_of(e), regular_grading(G->rd()), 4);
        require(semigroup_scalar_check(*ctx, free_z, linear(0)), e.type + " " + e.label + " c = 1");
    }
    auto a1 = make_group("A1");
    auto full = make_context(a1, Cone::full(1), ivec({1}), kAlgebraN);
    auto half = make_context(a1, a1->chamber(), ivec({1}), kAlgebraN);
    // Lambda_R: characters of Z/2, all in one torsor class
    long sols = 0;
    for (long k = 0; k < 2; ++k)
        if (semigroup_scalar_check(*full, sign, linear(k))) {
            ++sols;
            require(scalar_torsor_check(*full, sign, linear(0), linear(k)), "Z/2 solution outside the torsor");
        }
    require(sols == 2, "expected 2 solutions with values in Z/2");
    for (long k = -3; k <= 3; ++k)
        require(semigroup_scalar_check(*full, free_z, linear(k)) == (k == 0), "free solution on Lambda_R");
    // Lambda^+_R: a one-parameter family
    for (long k = -3; k <= 3; ++k) {
        require(semigroup_scalar_check(*half, free_z, linear(k)), "family member fails");
        require(scalar_torsor_check(*half, free_z, linear(0), linear(k)), "family member outside the torsor");
    }
    return "Lambda_R: 2 solutions (Z/2); Lambda^+_R: 7 of 7 family members";
}

std::string ac8() {
    long n = 0;
    for (const auto& e : corpus::admissible_cones()) {
        GroupData G(build_root_datum(e.type));
        auto ac = AdmissibleCone::make(G, cone_of(e));
        for (const auto& wc : {complex_from_cones(G, {ac.sigma}), toric_side(G, ac)}) {
            std::string where = e.type + " " + e.label;
            require(validate_complex(G, wc).valid, where + " invalid");
            require(oracle::boundary_squared_vanishes(aut_chain_complex(G, wc)), where + " d^2");
            auto h = cohomology(G, wc);
            require(h.H1.trivial(), where + " H1");
            require(h.H0 == aut_group(G, ac), where + " H0");
            ++n;
        }
    }
    GroupData t3(build_root_datum("T3"));
    WComplex sq = complex_from_json(t3, json::parse(corpus::squares_complex()));
    require(oracle::boundary_squared_vanishes(aut_chain_complex(t3, sq)), "squares d^2");
    require(cohomology(t3, sq).H1 == AbelianGroup{1, {}}, "squares H1");
    Cocycle tw = cocycle_from_json(sq, json::parse(corpus::squares_twist()));
    require(!is_coboundary(t3, sq, tw), "twist accepted as coboundary");
    require(!semigroup_admissible(t3, sq, tw), "twist admitted");
    return std::to_string(n) + " elementary complexes; squares H1 = Z, twist rejected";
}

std::string ac9() {
    long n = 0, nonint = 0;
    for (const auto& e : corpus::heights()) {
        auto G = make_group(e.type);
        auto h = corpus::make_height(*G, e);
        std::string where = e.type + " " + e.label;
        require(validate_height(*G, h).valid, where + " invalid");
        auto sf = special_fiber(G, h, regular_grading(G->rd()), 2 * kNilpotencyPower);
        bool nilpotent = false;
        for (const auto& D : linearity_domains(h))
            for (const auto& l : hilbert_basis(intersect(D, G->chamber()))) {
                // top coefficient of chi_l^k through repeated products
                WeightMap x{{l, 1}};
                Weight top = l;
                for (long k = 2; k <= kNilpotencyPower; ++k) {
                    x = fiber_product(sf, x, {{l, 1}});
                    top = add(top, l);
                    if (!x.count(top)) {
                        nilpotent = true;
                        break;
                    }
                }
            }
        auto rep = special_fiber_reduced(*G, h);
        require(rep.reduced == !nilpotent, where + " dichotomy");
        auto w = nilpotent_witness(*G, h);
        require(w.has_value() == !rep.reduced, where + " witness presence");
        if (w) {
            Rat v = h(w->lambda);
            require(v.get_den() != 1, where + " witness has integral height");
            require(floor_int(Rat(w->power) * v) > w->power * floor_int(v), where + " witness power");
            require(monomial_nilpotency(h, w->lambda, kNilpotencyPower) == std::optional<Int>(w->power), where + " power not least");
            ++nonint;
        }
        ++n;
    }
    require(n >= kMinHeights, "too few heights");
    require(nonint > 0 && nonint < n, "corpus must mix integral and non-integral heights");
    return std::to_string(n) + " heights, " + std::to_string(nonint) + " non-integral";
}

std::string ac10() {
    GroupData G(build_root_datum("A1xA1"));
    HeightFunction h{G.chamber(), {QVec{1, 0}, QVec{0, 1}}};
    WComplex sub = subdivision(G, h);
    require(validate_complex(G, sub).valid, "subdivision invalid");
    std::size_t maximal = 0;
    for (const auto& cl : orbit_classes(G, sub))
        if (cl.dim == 2) ++maximal;
    require(maximal == 2, "maximal cones mod W: " + std::to_string(maximal));
    std::size_t meeting = 0;
    for (const auto& D : linearity_domains(h))
        if (G.meets_chamber(D)) ++meeting;
    std::size_t comps = irreducible_components(G, sub).size();
    require(comps == meeting, "components " + std::to_string(comps) + " vs domains " + std::to_string(meeting));
    return "2 maximal cones, 2 components";
}

std::string ac11() {
    for (const char* t : {"A1", "A1xA1", "A2", "B2"}) {
        auto G = make_group(t);
        auto f = vinberg_fiber(G, {}, kVinbergN);
        require(f.sigma == Cone::full(G->rank()), std::string(t) + " generic sigma");
        auto basis = enumerate_basis(*f.ctx);
        for (const auto& l : basis)
            for (const auto& m : basis) {
                WeightMap expect;
                for (const auto& [nu, c] : oracle::tensor_oracle(G->rd(), l, m))
                    if (degree(*f.ctx, nu) <= kVinbergN) expect[nu] = c;
                auto got = char_product(CharElement::basis(f.ctx, l), CharElement::basis(f.ctx, m));
                require(got.coeffs == expect, std::string(t) + " " + wstr(l) + " x " + wstr(m));
            }
    }
    auto rep = vinberg_cross_check(make_group("A1"), kVinbergN);
    require(!rep.resolution.empty(), "no reading of the zero pattern passes both anchors");
    std::size_t closures = 0;
    for (const char* t : {"A1", "A2"}) {
        auto G = make_group(t);
        for (long N = 0; N <= kVinbergN; ++N) {
            auto s = vinberg_ring_support(G, IVec(G->rank(), 1), N);
            require(s.closed, std::string(t) + " closure at N = " + std::to_string(N));
            closures += s.products_checked;
        }
    }
    return "resolution: " + rep.resolution + "; " + std::to_string(closures) + " closure products";
}

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

std::pair<int, std::string> run_cli(const std::vector<std::string>& args) {
    std::string cmd = quote(REDVAR_CLI);
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw Fail{"cannot start the CLI"};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string ac12() {
    std::set<std::string> subcommands;
    long n = 0;
    for (const auto& args : corpus::cli_invocations()) {
        auto a = run_cli(args), b = run_cli(args);
        require(a.first == 0, args[0] + " exit " + std::to_string(a.first));
        require(a.second == b.second, args[0] + " output differs between runs");
        subcommands.insert(args[0]);
        ++n;
    }
    require(subcommands.size() == 11, "only " + std::to_string(subcommands.size()) + " subcommands covered");
    return std::to_string(n) + " invocations, 11 subcommands";
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"classification round trip", ac1},
        {"pair conditions of the invariants", ac2},
        {"automorphism groups", ac3},
        {"tensor products against characters", ac4},
        {"sl2 polynomial model", ac5},
        {"character ring laws", ac6},
        {"semigroup scalar torsor", ac7},
        {"cohomology", ac8},
        {"degeneration dichotomy", ac9},
        {"subdivision", ac10},
        {"Vinberg fibers", ac11},
        {"CLI determinism", ac12},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string status, detail;
        auto t0 = std::chrono::steady_clock::now();
        try {
            detail = criteria[i].second();
            status = "PASS";
        } catch (const Fail& f) {
            status = "FAIL";
            detail = f.msg;
        } catch (const std::exception& e) {
            status = "FAIL";
            detail = std::string("exception: ") + e.what();
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (status == "FAIL") ++failures;
        char t[32];
        std::snprintf(t, sizeof t, "%.2fs", sec);
        std::cout << "AC" << (i + 1) << " " << status << " " << criteria[i].first << " (" << detail << ") [" << t << "]\n";
        std::cout.flush();
    }
    return failures ? 1 : 0;
}
