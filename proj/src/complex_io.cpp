#include "redvar/complex_io.hpp"

#include <functional>
#include <map>
#include <set>

#include "redvar/error.hpp"

namespace redvar {

IVec ivec_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::BadInput, "expected an integer array");
    IVec v;
    for (const auto& x : j) {
        if (x.is_number_integer()) v.emplace_back(x.get<long>());
        else if (x.is_string()) v.emplace_back(x.get<std::string>());
        else throw Error(ErrorCode::BadInput, "expected an integer");
    }
    return v;
}

IMat imat_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::BadInput, "expected an array of integer arrays");
    IMat m;
    for (const auto& r : j) m.push_back(ivec_from_json(r));
    return m;
}

json to_json(const IVec& v) {
    json a = json::array();
    for (const auto& x : v) {
        if (x.fits_slong_p()) a.push_back(x.get_si());
        else a.push_back(x.get_str());
    }
    return a;
}

json to_json(const IMat& m) {
    json a = json::array();
    for (const auto& r : m) a.push_back(to_json(r));
    return a;
}

json to_json(const Cone& c) {
    return json{{"dim", c.dim()}, {"rays", to_json(c.rays())}, {"lineality", to_json(c.lineality())},
                {"facets", to_json(c.facets())}, {"equations", to_json(c.equations())}};
}

json to_json(const AbelianGroup& g) {
    json t = json::array();
    for (const auto& x : g.torsion) t.push_back(x.get_str());
    return json{{"free_rank", g.free_rank}, {"torsion", t}};
}

json to_json(const Invariant& inv, const RootDatum& rd) {
    json K = json::array(), J = json::array();
    for (auto i : inv.K) K.push_back(rd.root_name(i));
    for (auto i : inv.J) J.push_back(rd.root_name(i));
    return json{{"K", K}, {"lambda_prime", to_json(inv.lambda_prime)}, {"J", J}};
}

WComplex complex_from_json(const GroupData& G, const json& j) {
    const RootDatum& rd = G.rd();
    std::size_t n = rd.rank();
    if (!j.is_object() || !j.contains("cones") || !j["cones"].is_array())
        throw Error(ErrorCode::BadInput, "complex needs a \"cones\" array");
    WComplex wc;
    std::map<std::string, std::size_t> ids;
    for (const auto& c : j["cones"]) {
        std::string id = c.at("id").get<std::string>();
        if (ids.count(id)) throw Error(ErrorCode::BadInput, "duplicate cone id " + id);
        IMat gens = imat_from_json(c.value("generators", json::array()));
        for (const auto& g : gens)
            if (g.size() != n) throw Error(ErrorCode::RankMismatch, "generator length differs from the rank");
        ids[id] = wc.cells.size();
        wc.cells.push_back({id, Cone::from_generators(n, gens), {}});
    }
    std::vector<std::set<std::size_t>> direct(wc.size());
    std::size_t k = 0;
    for (const auto& c : j["cones"]) {
        for (const auto& f : c.value("faces", json::array())) {
            auto it = ids.find(f.get<std::string>());
            if (it == ids.end()) throw Error(ErrorCode::BadInput, "unknown face id " + f.get<std::string>());
            direct[k].insert(it->second);
        }
        ++k;
    }
    for (std::size_t c = 0; c < wc.size(); ++c) {
        std::set<std::size_t> all, stack(direct[c]);
        while (!stack.empty()) {
            std::size_t f = *stack.begin();
            stack.erase(stack.begin());
            if (f == c || !all.insert(f).second) continue;
            stack.insert(direct[f].begin(), direct[f].end());
        }
        wc.cells[c].faces.assign(all.begin(), all.end());
    }
    std::size_t r = rd.semisimple_rank();
    if (j.contains("w_action")) {
        const auto& wa = j["w_action"];
        if (!wa.is_array() || wa.size() != r)
            throw Error(ErrorCode::BadInput, "w_action needs one map per simple reflection");
        for (const auto& m : wa) {
            std::vector<std::size_t> row(wc.size());
            for (std::size_t c = 0; c < wc.size(); ++c) {
                if (!m.contains(wc.cells[c].id)) throw Error(ErrorCode::BadInput, "w_action misses " + wc.cells[c].id);
                auto it = ids.find(m[wc.cells[c].id].get<std::string>());
                if (it == ids.end()) throw Error(ErrorCode::BadInput, "w_action maps to an unknown id");
                row[c] = it->second;
            }
            wc.action.push_back(row);
        }
    } else {
        for (std::size_t i = 0; i < r; ++i) {
            IMat s = rd.reflection_matrix(i);
            std::vector<std::size_t> row(wc.size());
            for (std::size_t c = 0; c < wc.size(); ++c) {
                Cone img = apply_matrix(s, wc.cells[c].cone);
                std::vector<std::size_t> cand;
                for (std::size_t d = 0; d < wc.size(); ++d)
                    if (wc.cells[d].cone == img) cand.push_back(d);
                if (cand.size() == 1) row[c] = cand[0];
                else if (img == wc.cells[c].cone) row[c] = c;
                else if (cand.empty()) throw Error(ErrorCode::BadInput, "complex is not closed under W");
                else throw Error(ErrorCode::BadInput, "w_action is ambiguous and must be given");
            }
            wc.action.push_back(row);
        }
    }
    return wc;
}

json complex_to_json(const WComplex& wc) {
    json cones = json::array();
    for (const auto& c : wc.cells) {
        json faces = json::array();
        for (auto f : c.faces) faces.push_back(wc.cells[f].id);
        cones.push_back(json{{"id", c.id}, {"generators", to_json(c.cone.generators())}, {"faces", faces}});
    }
    json wa = json::array();
    for (const auto& row : wc.action) {
        json m = json::object();
        for (std::size_t c = 0; c < row.size(); ++c) m[wc.cells[c].id] = wc.cells[row[c]].id;
        wa.push_back(m);
    }
    return json{{"cones", cones}, {"w_action", wa}};
}

Cocycle cocycle_from_json(const WComplex& wc, const json& j) {
    Cocycle t;
    if (!j.is_object()) throw Error(ErrorCode::BadInput, "cocycle must be an object");
    const json& vg = j.value("value_group", json::object());
    for (const auto& s : vg.value("symbols", json::array())) t.vg.symbols.push_back(s.get<std::string>());
    IVec orders = ivec_from_json(vg.value("orders", json::array()));
    if (orders.empty()) orders.assign(t.vg.symbols.size(), 0);
    if (orders.size() != t.vg.symbols.size()) throw Error(ErrorCode::BadInput, "value group orders do not match symbols");
    for (const auto& o : orders)
        if (o < 0) throw Error(ErrorCode::BadInput, "negative order");
    t.vg.orders = orders;
    for (const auto& e : j.value("entries", json::array())) {
        std::size_t f = wc.index(e.at("face").get<std::string>()), c = wc.index(e.at("cone").get<std::string>());
        if (f == wc.size() || c == wc.size()) throw Error(ErrorCode::BadInput, "cocycle entry names an unknown cone");
        t.entries.push_back({f, c, imat_from_json(e.at("values"))});
    }
    return t;
}

}  // namespace redvar
