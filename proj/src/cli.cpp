#include "redvar/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "redvar/algebra.hpp"
#include "redvar/complex_io.hpp"
#include "redvar/degen.hpp"
#include "redvar/error.hpp"
#include "redvar/vinberg.hpp"

namespace redvar::cli {

namespace {

struct Malformed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Opts {
    std::string type, root_datum, cone, pair, complex, cocycle, height, gamma, zeros, l, m, scalars, json_out;
    std::string which = "sl2";
    long N = 6;
    bool cross_check = false;
};

std::string ascii(std::string s) {
    const std::string minus = "\xE2\x88\x92";
    for (auto p = s.find(minus); p != std::string::npos; p = s.find(minus)) s.replace(p, minus.size(), "-");
    return s;
}

json parse_json(const std::string& text, const char* what) {
    std::string src = text;
    if (!src.empty() && src[0] == '@') {
        std::ifstream in(src.substr(1));
        if (!in) throw Malformed(std::string("cannot read ") + what + " file " + src.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        src = ss.str();
    }
    try {
        return json::parse(ascii(src));
    } catch (const json::exception& e) {
        throw Malformed(std::string("malformed ") + what + ": " + e.what());
    }
}

GroupPtr group_of(const Opts& o) {
    Caps caps = caps_from_env();
    if (!o.type.empty()) return std::make_shared<const GroupData>(build_root_datum(o.type), caps);
    if (!o.root_datum.empty()) {
        json j = parse_json(o.root_datum, "root datum");
        if (!j.is_object() || !j.contains("rank")) throw Malformed("root datum needs rank, roots, coroots");
        return std::make_shared<const GroupData>(
            build_root_datum(j.at("rank").get<std::size_t>(), imat_from_json(j.value("roots", json::array())),
                             imat_from_json(j.value("coroots", json::array()))),
            caps);
    }
    throw Malformed("--type or --root-datum is required");
}

void need(const std::string& v, const char* flag) {
    if (v.empty()) throw Malformed(std::string(flag) + " is required");
}

IVec vec_arg(const std::string& s, std::size_t n, const char* what) {
    std::string t = ascii(s);
    IVec v;
    if (!t.empty() && t[0] == '[') {
        v = ivec_from_json(parse_json(t, what));
    } else {
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                v.emplace_back(item);
            } catch (const std::invalid_argument&) {
                throw Malformed(std::string("bad integer in ") + what);
            }
        }
    }
    if (v.size() != n) throw Malformed(std::string(what) + " has the wrong length");
    return v;
}

Cone cone_of(const json& j, std::size_t n) {
    const json& g = j.is_object() ? j.at("generators") : j;
    IMat gens = imat_from_json(g);
    for (const auto& x : gens)
        if (x.size() != n) throw Malformed("cone generator has the wrong length");
    return Cone::from_generators(n, gens);
}

Cone cone_arg(const Opts& o, std::size_t n) {
    need(o.cone, "--cone");
    return cone_of(parse_json(o.cone, "cone"), n);
}

Rat rat_of(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        try {
            Rat q(ascii(j.get<std::string>()));
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
        }
    }
    throw Malformed("expected an integer or a rational string");
}

json rat_json(const Rat& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

std::string key_of(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].get_str();
    return s;
}

json weight_map_json(const WeightMap& m) {
    json j = json::object();
    for (const auto& [w, c] : m) j[key_of(w)] = c.fits_slong_p() ? json(c.get_si()) : json(c.get_str());
    return j;
}

json roots_json(const RootDatum& rd, const RootSet& s) {
    json a = json::array();
    for (auto i : s) a.push_back(rd.root_name(i));
    return a;
}

RootSet roots_arg(const RootDatum& rd, const json& j) {
    RootSet s;
    for (const auto& x : j) {
        std::size_t i = rd.semisimple_rank();
        if (x.is_number_integer()) i = x.get<std::size_t>();
        else if (x.is_string())
            for (std::size_t k = 0; k < rd.semisimple_rank(); ++k)
                if (rd.root_name(k) == x.get<std::string>()) i = k;
        if (i >= rd.semisimple_rank()) throw Malformed("unknown simple root " + x.dump());
        s.push_back(i);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

RootSet roots_list(const RootDatum& rd, const std::string& s) {
    json a = json::array();
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) a.push_back(item);
    return roots_arg(rd, a);
}

json hilbert_json(const std::map<Int, Int>& h) {
    json j = json::object();
    for (const auto& [d, c] : h) j[d.get_str()] = c.get_si();
    return j;
}

IVec gamma_arg(const Opts& o, const RootDatum& rd) {
    return o.gamma.empty() ? regular_grading(rd) : vec_arg(o.gamma, rd.rank(), "--gamma");
}

ContextPtr context_arg(GroupPtr G, const Opts& o) {
    Cone sigma = cone_arg(o, G->rank());
    auto adm = is_w_admissible(*G, sigma, Exec::Serial);
    if (!adm.admissible) throw Error(ErrorCode::NotAdmissible, adm.reason);
    return make_context(G, sigma, gamma_arg(o, G->rd()), Int(o.N));
}

Weight member_arg(const CharContext& ctx, const std::string& s, const char* what) {
    Weight w = vec_arg(s, ctx.group->rank(), what);
    if (!ctx.group->rd().is_dominant(w) || !ctx.sigma.contains(w))
        throw Error(ErrorCode::OutOfSupport, std::string(what) + " is not a dominant weight of the cone");
    return w;
}

// classify ------------------------------------------------------------

json cmd_classify(const Opts& o) {
    auto G = group_of(o);
    const RootDatum& rd = G->rd();
    json out;
    if (!o.pair.empty()) {
        json p = parse_json(o.pair, "pair");
        Cone C = cone_of(p.at("C"), G->rank());
        RootSet K = roots_arg(rd, p.value("K", json::array()));
        auto pc = check_pair(*G, C, K);
        out["pair"] = {{"in_chamber", pc.in_chamber}, {"cond1", pc.cond1}, {"cond2", pc.cond2}};
        if (!pc.ok()) throw Error(ErrorCode::BadPair, "pair fails the admissibility conditions");
        out["sigma"] = to_json(reconstruct_sigma(*G, C, K));
        return out;
    }
    Cone sigma = cone_arg(o, G->rank());
    auto adm = is_w_admissible(*G, sigma, Exec::Serial);
    if (!adm.admissible) throw Error(ErrorCode::NotAdmissible, adm.reason);
    auto [C, K] = cone_invariants(*G, sigma);
    auto pc = check_pair(*G, C, K);
    Cone back = reconstruct_sigma(*G, C, K);
    out["C"] = to_json(C);
    out["K"] = roots_json(rd, K);
    out["pair"] = {{"in_chamber", pc.in_chamber}, {"cond1", pc.cond1}, {"cond2", pc.cond2}};
    out["reconstructed"] = to_json(back);
    out["round_trip"] = back == sigma;
    return out;
}

// admissible ----------------------------------------------------------

json cmd_admissible(const Opts& o) {
    auto G = group_of(o);
    const RootDatum& rd = G->rd();
    Cone sigma = cone_arg(o, G->rank());
    auto adm = is_w_admissible(*G, sigma, Exec::Serial);
    json out;
    out["admissible"] = adm.admissible;
    out["cone"] = to_json(sigma);
    if (!adm.admissible) {
        out["failed_condition"] = adm.failed_condition;
        out["reason"] = adm.reason;
        if (adm.witness) out["witness"] = *adm.witness;
        return out;
    }
    auto ac = AdmissibleCone::make(*G, sigma);
    auto inv = isotropy_invariant(*G, ac);
    out["C"] = to_json(ac.C);
    out["K"] = roots_json(rd, ac.K);
    out["J"] = roots_json(rd, inv.J);
    out["lambda_prime_basis"] = to_json(inv.lambda_prime);
    out["aut"] = to_json(aut_group(*G, ac));
    out["quasiaffine"] = quasiaffine_check(*G, inv);
    auto poset = orbit_poset(*G, ac);
    json orbits = json::array();
    for (const auto& cl : poset.classes) {
        orbits.push_back({{"rep", to_json(cl.rep)},
                          {"faces", cl.members.size()},
                          {"invariant", to_json(cl.inv, rd)},
                          {"dim", cl.dim},
                          {"aut", to_json(cl.aut)}});
    }
    out["orbits"] = orbits;
    json covers = json::array();
    for (const auto& [a, b] : poset.covers) covers.push_back({a, b});
    out["covers"] = covers;
    return out;
}

// complex / cohomology -------------------------------------------------

json cells_json(const WComplex& wc, const std::vector<std::size_t>& ids) {
    json a = json::array();
    for (auto i : ids) a.push_back(wc.cells[i].id);
    return a;
}

json cmd_complex(const Opts& o) {
    auto G = group_of(o);
    need(o.complex, "--complex");
    WComplex wc = complex_from_json(*G, parse_json(o.complex, "complex"));
    auto rep = validate_complex(*G, wc);
    json out{{"valid", rep.valid}, {"axiom", rep.axiom}, {"message", rep.message}};
    if (!rep.valid) return out;
    out["injective"] = rho_injective(wc);
    out["components"] = cells_json(wc, irreducible_components(*G, wc));
    json classes = json::array();
    for (const auto& cl : orbit_classes(*G, wc)) {
        json c{{"members", cells_json(wc, cl.members)},
               {"rep", wc.cells[cl.rep].id},
               {"dim", cl.dim},
               {"characters", to_json(cl.characters)}};
        c["invariant"] = cl.inv ? to_json(*cl.inv, G->rd()) : json(nullptr);
        classes.push_back(c);
    }
    out["classes"] = classes;
    out["complex"] = complex_to_json(wc);
    return out;
}

json cmd_cohomology(const Opts& o) {
    auto G = group_of(o);
    need(o.complex, "--complex");
    WComplex wc = complex_from_json(*G, parse_json(o.complex, "complex"));
    auto rep = validate_complex(*G, wc);
    if (!rep.valid) throw Error(ErrorCode::InvalidTriple, "complex fails axiom " + std::to_string(rep.axiom) + ": " + rep.message);
    auto coh = cohomology(*G, wc);
    json out{{"H0", to_json(coh.H0)}, {"H1", to_json(coh.H1)}, {"cycles", to_json(coh.cycles)}};
    if (!o.cocycle.empty()) {
        Cocycle t = cocycle_from_json(wc, parse_json(o.cocycle, "cocycle"));
        json cls = json::array();
        for (const auto& v : cocycle_class(*G, wc, t)) cls.push_back(to_json(v));
        out["class"] = cls;
        out["coboundary"] = is_coboundary(*G, wc, t);
        out["semigroup_admissible"] = semigroup_admissible(*G, wc, t);
    }
    return out;
}

// representation theory and character rings ---------------------------

json cmd_tensor(const Opts& o) {
    auto G = group_of(o);
    const RootDatum& rd = G->rd();
    need(o.l, "--l");
    need(o.m, "--m");
    Weight l = vec_arg(o.l, rd.rank(), "--l"), m = vec_arg(o.m, rd.rank(), "--m");
    if (!rd.is_dominant(l) || !rd.is_dominant(m)) throw Error(ErrorCode::OutOfSupport, "weights must be dominant");
    return weight_map_json(tensor_decompose(rd, l, m, Exec::Serial, G->caps()));
}

json cmd_product(const Opts& o) {
    auto G = group_of(o);
    auto ctx = context_arg(G, o);
    need(o.l, "--l");
    need(o.m, "--m");
    Weight l = member_arg(*ctx, o.l, "--l"), m = member_arg(*ctx, o.m, "--m");
    auto p = char_product(CharElement::basis(ctx, l), CharElement::basis(ctx, m));
    return {{"K", roots_json(G->rd(), ctx->K)}, {"gamma", to_json(ctx->gamma)}, {"N", o.N}, {"product", weight_map_json(p.coeffs)}};
}

json cmd_hilbert(const Opts& o) {
    auto G = group_of(o);
    auto ctx = context_arg(G, o);
    return {{"hilbert", hilbert_json(hilbert_function(*ctx))},
            {"basis_size", enumerate_basis(*ctx).size()},
            {"N", o.N},
            {"gamma", to_json(ctx->gamma)}};
}

// {"value_group": {...}, "linear": [value per coordinate], "overrides": {"1,0": value}}
json cmd_semigroup(const Opts& o) {
    auto G = group_of(o);
    auto ctx = context_arg(G, o);
    std::size_t n = G->rank();
    ValueGroup vg{{"z"}, {Int(0)}};
    IMat linear(n, IVec(1, 0));
    std::map<Weight, IVec> overrides;
    if (!o.scalars.empty()) {
        json j = parse_json(o.scalars, "scalars");
        if (j.contains("value_group")) {
            vg.symbols = j["value_group"].at("symbols").get<std::vector<std::string>>();
            vg.orders = ivec_from_json(j["value_group"].at("orders"));
            if (vg.orders.size() != vg.symbols.size()) throw Malformed("value group orders and symbols differ in length");
        }
        linear = IMat(n, IVec(vg.symbols.size(), 0));
        if (j.contains("linear")) linear = imat_from_json(j["linear"]);
        if (linear.size() != n) throw Malformed("linear scalars need one value per coordinate");
        for (const auto& r : linear)
            if (r.size() != vg.symbols.size()) throw Malformed("scalar value has the wrong length");
        const json ov = j.value("overrides", json::object());
        for (const auto& [k, v] : ov.items()) {
            IVec val = ivec_from_json(v);
            if (val.size() != vg.symbols.size()) throw Malformed("scalar value has the wrong length");
            overrides[vec_arg(k, n, "override weight")] = val;
        }
    }
    ScalarSystem c = [&](const Weight& l) {
        if (auto it = overrides.find(l); it != overrides.end()) return vg.reduce(it->second);
        IVec v(vg.symbols.size(), 0);
        for (std::size_t i = 0; i < n; ++i) v = add(v, scale(linear[i], l[i]));
        return vg.reduce(v);
    };
    return {{"ok", semigroup_scalar_check(*ctx, vg, c)}, {"basis_size", enumerate_basis(*ctx).size()}, {"N", o.N}};
}

// degenerations --------------------------------------------------------

HeightFunction height_of(const json& j, const Cone& sigma) {
    HeightFunction h{sigma, {}};
    if (!j.contains("pieces") || !j["pieces"].is_array()) throw Malformed("height needs a \"pieces\" array");
    for (const auto& p : j["pieces"]) {
        if (!p.is_array()) throw Malformed("height piece must be an array");
        QVec v;
        for (const auto& x : p) v.push_back(rat_of(x));
        h.pieces.push_back(v);
    }
    return h;
}

json cmd_height_system(const GroupData& G, const json& j) {
    WComplex wc = complex_from_json(G, j.at("complex"));
    auto rep = validate_complex(G, wc);
    if (!rep.valid) throw Error(ErrorCode::InvalidTriple, "complex fails axiom " + std::to_string(rep.axiom) + ": " + rep.message);
    HeightSystem hs{wc, {}, {}};
    auto cell = [&](const json& id) {
        std::size_t c = wc.index(id.get<std::string>());
        if (c == wc.size()) throw Malformed("unknown cone id " + id.dump());
        return c;
    };
    for (const auto& [id, h] : j.at("heights").items()) {
        std::size_t c = cell(json(id));
        hs.heights[c] = height_of(h, wc.cells[c].cone);
    }
    for (const auto& g : j.value("gamma", json::array()))
        hs.gamma.push_back({cell(g.at("face")), cell(g.at("cone1")), cell(g.at("cone2")), ivec_from_json(g.at("values"))});
    auto r = validate_height_system(G, hs);
    return {{"valid", r.valid}, {"message", r.message}};
}

json cmd_degenerate(const Opts& o) {
    auto G = group_of(o);
    need(o.height, "--height");
    json j = parse_json(o.height, "height");
    if (j.contains("heights")) return cmd_height_system(*G, j);
    if (!j.contains("sigma")) throw Malformed("height needs \"sigma\" and \"pieces\"");
    HeightFunction h = height_of(j, cone_of(j["sigma"], G->rank()));
    for (const auto& p : h.pieces)
        if (p.size() != G->rank()) throw Malformed("height piece has the wrong length");
    auto rep = validate_height(*G, h);
    json out{{"valid", rep.valid}, {"message", rep.message}};
    if (!rep.valid) {
        if (rep.witness) out["witness"] = *rep.witness;
        return out;
    }
    json domains = json::array();
    for (const auto& d : linearity_domains(h)) domains.push_back(to_json(d));
    out["domains"] = domains;
    WComplex sub = subdivision(*G, h);
    out["subdivision"] = complex_to_json(sub);
    out["components"] = irreducible_components(*G, sub).size();
    out["lifted_cone"] = to_json(lifted_cone(*G, h));
    auto red = special_fiber_reduced(*G, h);
    out["reduced"] = red.reduced;
    if (auto w = nilpotent_witness(*G, h))
        out["nilpotent"] = {{"lambda", to_json(w->lambda)}, {"power", w->power.get_si()}, {"height", rat_json(h(w->lambda))}};
    if (!o.l.empty() || !o.m.empty()) {
        need(o.l, "--l");
        need(o.m, "--m");
        auto sf = special_fiber(G, h, gamma_arg(o, G->rd()), Int(o.N));
        Weight l = member_arg(*sf.ctx, o.l, "--l"), m = member_arg(*sf.ctx, o.m, "--m");
        out["product"] = weight_map_json(fiber_product(sf, {{l, 1}}, {{m, 1}}));
    }
    return out;
}

json cmd_vinberg(const Opts& o) {
    auto G = group_of(o);
    const RootDatum& rd = G->rd();
    if (o.cross_check) {
        auto rep = vinberg_cross_check(G, Int(o.N));
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"reading", r.name},
                            {"generic_level", roots_json(rd, r.generic_level)},
                            {"origin_level", roots_json(rd, r.origin_level)},
                            {"generic_is_group", r.generic_is_group},
                            {"origin_is_popov", r.origin_is_popov}});
        return {{"readings", rows}, {"resolution", rep.resolution}};
    }
    RootSet Z = roots_list(rd, o.zeros);
    if (!o.cone.empty()) {
        auto f = x_star_v_fiber(G, cone_arg(o, G->rank()), Z, Int(o.N));
        return {{"zeros", roots_json(rd, Z)},
                {"level", roots_json(rd, f.level)},
                {"sigma", to_json(f.sigma)},
                {"hilbert", hilbert_json(hilbert_function(*f.ctx))}};
    }
    auto f = vinberg_fiber(G, Z, Int(o.N));
    return {{"zeros", roots_json(rd, f.zeros)},
            {"level", roots_json(rd, f.level)},
            {"gamma", to_json(f.gamma)},
            {"sigma", to_json(f.sigma)},
            {"hilbert", hilbert_json(hilbert_function(*f.ctx))}};
}

// oracles --------------------------------------------------------------

// Tensor products of all dominant pairs with dim V_l * dim V_m <= bound, against formal characters.
json tensor_sweep(const GroupData& G, long bound) {
    const RootDatum& rd = G.rd();
    std::vector<Weight> weights;
    std::vector<Weight> frontier{IVec(rd.rank(), 0)};
    std::set<Weight> seen(frontier.begin(), frontier.end());
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& w : frontier) {
            if (weyl_dim(rd, w) > bound) continue;
            weights.push_back(w);
            for (std::size_t i = 0; i < rd.rank(); ++i) {
                Weight v = w;
                v[i] += 1;
                if (rd.is_dominant(v) && seen.insert(v).second) next.push_back(v);
            }
        }
        frontier = next;
    }
    std::sort(weights.begin(), weights.end());
    std::size_t pairs = 0;
    for (const auto& l : weights)
        for (const auto& m : weights) {
            if (weyl_dim(rd, l) * weyl_dim(rd, m) > bound) continue;
            ++pairs;
            WeightMap lhs, rhs;
            for (const auto& [a, x] : *weight_multiplicities(rd, l, G.caps()))
                for (const auto& [b, y] : *weight_multiplicities(rd, m, G.caps())) lhs[add(a, b)] += x * y;
            for (const auto& [nu, c] : tensor_decompose(rd, l, m, Exec::Serial, G.caps()))
                for (const auto& [a, x] : *weight_multiplicities(rd, nu, G.caps())) rhs[a] += c * x;
            if (lhs != rhs)
                return {{"ok", false}, {"pairs_checked", pairs}, {"mismatch", key_of(l) + " x " + key_of(m)}};
        }
    return {{"ok", true}, {"pairs_checked", pairs}, {"mismatch", ""}};
}

json cmd_oracle(const Opts& o) {
    if (o.which == "sl2") {
        if (o.N < 0 || o.N > 6) throw Error(ErrorCode::DimensionTooLarge, "sl2 oracle supports N <= 6");
        auto r = sl2_oracle(int(o.N));
        return {{"ok", r.ok}, {"pairs_checked", r.pairs_checked}, {"mismatch", r.mismatch}};
    }
    auto G = group_of(o);
    if (o.which == "tensor") return tensor_sweep(*G, o.N);
    if (o.which == "associativity") {
        auto ctx = context_arg(G, o);
        return {{"ok", associativity_check(*ctx, Exec::Serial)}, {"basis_size", enumerate_basis(*ctx).size()}};
    }
    throw Malformed("unknown oracle " + o.which);
}

void add_common(CLI::App* sub, Opts& o) {
    sub->add_option("--type", o.type, "Root datum type, e.g. A2, B2, A1xA1, GL2");
    sub->add_option("--root-datum", o.root_datum, "Root datum as JSON {rank, roots, coroots}, or @file");
    sub->add_option("--json-out", o.json_out, "Write the report to this file");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Opts o;
    CLI::App app{"Combinatorics of reductive varieties", "redvar"};
    app.require_subcommand(1);
    using Handler = json (*)(const Opts&);
    std::vector<std::pair<CLI::App*, Handler>> subs;
    auto add = [&](const char* name, const char* help, Handler h) {
        auto* s = app.add_subcommand(name, help);
        add_common(s, o);
        subs.push_back({s, h});
        return s;
    };
    auto* classify = add("classify", "Invariants (C, K) of an admissible cone, or the cone of a pair", cmd_classify);
    classify->add_option("--cone", o.cone, "Cone generators as JSON");
    classify->add_option("--pair", o.pair, "JSON {\"C\": generators, \"K\": [root names]}");
    add("admissible", "W-admissibility, isotropy invariants and orbit poset", cmd_admissible)
        ->add_option("--cone", o.cone, "Cone generators as JSON");
    add("complex", "Validate a W-complex of cones", cmd_complex)->add_option("--complex", o.complex, "Complex JSON or @file");
    auto* coh = add("cohomology", "Automorphism-sheaf cohomology and cocycle classes", cmd_cohomology);
    coh->add_option("--complex", o.complex, "Complex JSON or @file");
    coh->add_option("--cocycle", o.cocycle, "Cocycle JSON or @file");
    auto* tensor = add("tensor", "Tensor product decomposition", cmd_tensor);
    tensor->add_option("--l", o.l, "Dominant weight");
    tensor->add_option("--m", o.m, "Dominant weight");
    auto ring_opts = [&](CLI::App* s) {
        s->add_option("--cone", o.cone, "Cone generators as JSON");
        s->add_option("--gamma", o.gamma, "Truncation grading (default: 1 on each fundamental weight)");
        s->add_option("--N", o.N, "Truncation degree");
    };
    auto* product = add("product", "Product of two basis characters", cmd_product);
    ring_opts(product);
    product->add_option("--l", o.l, "Weight");
    product->add_option("--m", o.m, "Weight");
    auto* sg = add("semigroup-check", "Check a scalar system against the semigroup laws", cmd_semigroup);
    ring_opts(sg);
    sg->add_option("--scalars", o.scalars, "Scalar system JSON or @file (default: all ones)");
    auto* degen = add("degenerate", "Height function or height system", cmd_degenerate);
    degen->add_option("--height", o.height, "Height JSON or @file");
    degen->add_option("--gamma", o.gamma, "Grading for the special fiber product");
    degen->add_option("--N", o.N, "Truncation degree for the special fiber product");
    degen->add_option("--l", o.l, "Weight");
    degen->add_option("--m", o.m, "Weight");
    auto* vin = add("vinberg-fiber", "Fiber of the Vinberg family over a zero pattern", cmd_vinberg);
    vin->add_option("--zeros", o.zeros, "Vanishing coordinates, e.g. a1,a2");
    vin->add_option("--cone", o.cone, "Cone of an affine variety (X * V fiber)");
    vin->add_option("--N", o.N, "Truncation degree");
    vin->add_flag("--cross-check", o.cross_check, "Compare both readings of the zero pattern");
    auto* hil = add("hilbert", "Hilbert function of a truncated character ring", cmd_hilbert);
    ring_opts(hil);
    auto* orc = add("oracle", "Independent checks: sl2, tensor, associativity", cmd_oracle);
    orc->add_option("--which", o.which, "sl2, tensor or associativity");
    ring_opts(orc);

    auto fail = [&](int code, const std::string& name, const std::string& msg) {
        json e{{"error", {{"code", name}, {"message", msg}}}};
        out << e.dump(2) << "\n";
        return code;
    };
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return fail(2, "MalformedInput", e.what());
    }
    try {
        json result;
        for (const auto& [s, h] : subs)
            if (s->parsed()) result = h(o);
        std::string text = result.dump(2) + "\n";
        if (o.json_out.empty()) {
            out << text;
        } else {
            std::ofstream f(o.json_out);
            if (!f) return fail(2, "MalformedInput", "cannot write " + o.json_out);
            f << text;
        }
        return 0;
    } catch (const Malformed& e) {
        return fail(2, "MalformedInput", e.what());
    } catch (const json::exception& e) {
        return fail(2, "MalformedInput", e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BadInput) return fail(2, error_name(e.code()), e.what());
        return fail(1, error_name(e.code()), e.what());
    } catch (const std::invalid_argument& e) {
        return fail(2, "MalformedInput", e.what());
    }
}

}  // namespace redvar::cli
