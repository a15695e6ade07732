#include "redvar/wcomplex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace redvar {

std::size_t WComplex::index(const std::string& id) const {
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].id == id) return i;
    return cells.size();
}

bool WComplex::is_face_of(std::size_t f, std::size_t c) const {
    if (f == c) return true;
    const auto& fs = cells[c].faces;
    return std::find(fs.begin(), fs.end(), f) != fs.end();
}

std::size_t WComplex::act(const WeylGroup& W, std::size_t w, std::size_t c) const {
    const auto& word = W.word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) c = action[*it][c];
    return c;
}

std::vector<std::vector<std::size_t>> WComplex::orbits() const {
    std::vector<std::size_t> parent(cells.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& row : action)
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::size_t a = find(c), b = find(row[c]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t c = 0; c < cells.size(); ++c) groups[find(c)].push_back(c);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [k, v] : groups) out.push_back(v);
    return out;
}

std::vector<std::size_t> WComplex::maximal_cells() const {
    std::vector<bool> is_face(cells.size(), false);
    for (const auto& c : cells)
        for (auto f : c.faces) is_face[f] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (!is_face[i]) out.push_back(i);
    return out;
}

WComplex complex_from_cones(const GroupData& G, const std::vector<Cone>& cones) {
    const WeylGroup& W = G.weyl();
    std::set<Cone> all;
    for (const auto& c : cones)
        for (const auto& f : faces(c))
            for (const auto& w : W.elements()) all.insert(apply_matrix(w, f));
    WComplex wc;
    std::map<Cone, std::size_t> idx;
    for (const auto& c : all) {
        idx[c] = wc.cells.size();
        wc.cells.push_back({"c" + std::to_string(wc.cells.size()), c, {}});
    }
    for (auto& cell : wc.cells) {
        for (const auto& f : faces(cell.cone))
            if (f != cell.cone) cell.faces.push_back(idx.at(f));
        std::sort(cell.faces.begin(), cell.faces.end());
    }
    const RootDatum& rd = G.rd();
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
        IMat s = rd.reflection_matrix(i);
        std::vector<std::size_t> row;
        for (const auto& cell : wc.cells) row.push_back(idx.at(apply_matrix(s, cell.cone)));
        wc.action.push_back(row);
    }
    return wc;
}

}  // namespace redvar
