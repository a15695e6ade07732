#pragma once
// Argument lists covering every CLI subcommand over the test corpus.

#include <string>
#include <vector>

#include "corpus.hpp"
#include "height_corpus.hpp"
#include "redvar/complex_io.hpp"

namespace corpus {

inline const char* squares_complex() {
    return R"({"cones":[
  {"id":"o","generators":[]},
  {"id":"r1","generators":[[1,0,1]],"faces":["o"]},
  {"id":"r2","generators":[[0,1,1]],"faces":["o"]},
  {"id":"r3","generators":[[-1,0,1]],"faces":["o"]},
  {"id":"r4","generators":[[0,-1,1]],"faces":["o"]},
  {"id":"f12","generators":[[1,0,1],[0,1,1]],"faces":["r1","r2"]},
  {"id":"f34","generators":[[-1,0,1],[0,-1,1]],"faces":["r3","r4"]},
  {"id":"f23a","generators":[[0,1,1],[-1,0,1]],"faces":["r2","r3"]},
  {"id":"f41a","generators":[[0,-1,1],[1,0,1]],"faces":["r4","r1"]},
  {"id":"f23b","generators":[[0,1,1],[-1,0,1]],"faces":["r2","r3"]},
  {"id":"f41b","generators":[[0,-1,1],[1,0,1]],"faces":["r4","r1"]},
  {"id":"s1","generators":[[1,0,1],[0,1,1],[-1,0,1],[0,-1,1]],"faces":["f12","f34","f23a","f41a"]},
  {"id":"s2","generators":[[1,0,1],[0,1,1],[-1,0,1],[0,-1,1]],"faces":["f12","f34","f23b","f41b"]}]})";
}

// Twist by the character x mod 2 across the seam f34, on the side of s2.
inline std::string squares_twist() {
    using namespace redvar;
    GroupData t3(build_root_datum("T3"));
    WComplex wc = complex_from_json(t3, json::parse(squares_complex()));
    std::size_t seam = wc.index("f34"), side = wc.index("s2");
    auto in_seam = [&](std::size_t c) { return wc.is_face_of(c, seam); };
    auto on_side = [&](std::size_t c) { return wc.is_face_of(c, side) && !in_seam(c); };
    json entries = json::array();
    for (std::size_t c = 0; c < wc.size(); ++c)
        for (auto f : wc.cells[c].faces) {
            long v = (in_seam(c) ? 0 : 1) - (in_seam(f) ? 0 : 1);
            if (in_seam(f) && on_side(c)) v = 0;
            entries.push_back({{"face", wc.cells[f].id}, {"cone", wc.cells[c].id}, {"values", {{v}, {0}, {0}}}});
        }
    return json{{"value_group", {{"symbols", {"z"}}, {"orders", {2}}}}, {"entries", entries}}.dump();
}

inline const char* a1_height_system() {
    return R"({"complex":{"cones":[{"id":"o","generators":[]},{"id":"p","generators":[[1]],"faces":["o"]},
  {"id":"n","generators":[[-1]],"faces":["o"]}]},
  "heights":{"p":{"pieces":[[1],[-1]]},"n":{"pieces":[[1],[-1]]}},
  "gamma":[{"face":"o","cone1":"p","cone2":"n","values":[]}]})";
}

inline std::string gens_json(const std::vector<std::vector<long>>& g) {
    redvar::json a = redvar::json::array();
    for (const auto& v : g) a.push_back(v);
    return a.dump();
}

inline std::string height_json(const redvar::GroupData& G, const HeightEntry& e) {
    auto h = make_height(G, e);
    redvar::json pieces = redvar::json::array();
    for (const auto& p : h.pieces) {
        redvar::json r = redvar::json::array();
        for (const auto& x : p) r.push_back(x.get_str());
        pieces.push_back(r);
    }
    return redvar::json{{"sigma", redvar::json::parse(gens_json(e.sigma))}, {"pieces", pieces}}.dump();
}

inline std::vector<std::vector<std::string>> cli_invocations() {
    using V = std::vector<std::string>;
    std::vector<V> out;
    for (const auto& e : admissible_cones()) {
        std::string cone = gens_json(e.gens);
        out.push_back({"classify", "--type", e.type, "--cone", cone});
        out.push_back({"admissible", "--type", e.type, "--cone", cone});
        out.push_back({"hilbert", "--type", e.type, "--cone", cone, "--N", "4"});
        out.push_back({"semigroup-check", "--type", e.type, "--cone", cone, "--N", "3"});
        out.push_back({"oracle", "--which", "associativity", "--type", e.type, "--cone", cone, "--N", "3"});
        out.push_back({"product", "--type", e.type, "--cone", cone, "--N", "4", "--l",
                       std::string(rank_of(e.type) == 1 ? "0" : "0,0"), "--m", rank_of(e.type) == 1 ? "0" : "0,0"});
        out.push_back({"vinberg-fiber", "--type", e.type, "--cone", cone, "--zeros", rank_of(e.type) == 1 ? "a1" : "a1,a2", "--N", "3"});
        redvar::GroupData G(redvar::build_root_datum(e.type));
        auto wc = redvar::complex_from_cones(G, {redvar::Cone::from_generators(G.rank(), to_imat(e.gens))});
        std::string cx = redvar::complex_to_json(wc).dump();
        out.push_back({"complex", "--type", e.type, "--complex", cx});
        out.push_back({"cohomology", "--type", e.type, "--complex", cx});
    }
    out.push_back({"tensor", "--type", "A1", "--l", "1", "--m", "1"});
    out.push_back({"tensor", "--type", "A2", "--l", "1,1", "--m", "2,0"});
    out.push_back({"tensor", "--type", "B2", "--l", "1,1", "--m", "0,1"});
    out.push_back({"product", "--type", "A2", "--cone", "[[1,0],[-1,0],[0,1],[0,-1]]", "--l", "1,1", "--m", "1,1"});
    out.push_back({"product", "--type", "A2", "--cone", "[[1,0],[0,1]]", "--l", "1,1", "--m", "1,1"});
    out.push_back({"classify", "--type", "A2", "--pair", R"({"C":[[1,0],[0,1]],"K":["a1"]})"});
    out.push_back({"complex", "--type", "T3", "--complex", squares_complex()});
    out.push_back({"cohomology", "--type", "T3", "--complex", squares_complex(), "--cocycle", squares_twist()});
    out.push_back({"degenerate", "--type", "A1", "--height", a1_height_system()});
    for (const auto& e : heights()) {
        redvar::GroupData G(redvar::build_root_datum(e.type));
        out.push_back({"degenerate", "--type", e.type, "--height", height_json(G, e)});
    }
    for (const char* t : {"A1", "A1xA1", "A2", "B2"}) {
        out.push_back({"vinberg-fiber", "--type", t, "--cross-check", "--N", "4"});
        out.push_back({"vinberg-fiber", "--type", t, "--N", "4"});
        out.push_back({"vinberg-fiber", "--type", t, "--zeros", "a1", "--N", "4"});
        out.push_back({"oracle", "--which", "tensor", "--type", t, "--N", "64"});
    }
    out.push_back({"semigroup-check", "--type", "A2", "--cone", "[[1,0],[0,1]]", "--N", "3", "--scalars",
                   R"({"value_group":{"symbols":["z"],"orders":[2]},"linear":[[1],[0]],"overrides":{"1,0":[1]}})"});
    out.push_back({"oracle", "--which", "sl2", "--N", "4"});
    return out;
}

}  // namespace corpus
