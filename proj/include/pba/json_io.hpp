#pragma once

#include <json.hpp>

#include "pba/algebra_element.hpp"
#include "pba/blocks.hpp"

namespace pba {

using nlohmann::json;

inline json to_json(const Partition& lam) { return json(lam.parts()); }
inline Partition partition_from_json(const json& j) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

/// tableau = array of rows
inline json to_json(const StandardTableau& tab) { return json(tab.rows); }

/// {"r": int, "s": int, "pairs": [[a, b], ...]} with 1-based node numbers,
/// northern nodes 1..r, southern r+1..r+s.
inline json to_json(const Diagram& d) {
    json pairs = json::array();
    for (int i = 0; i < d.total_nodes(); ++i)
        if (i < d.partner(i)) pairs.push_back(json::array({i + 1, d.partner(i) + 1}));
    return json{{"r", d.r}, {"s", d.s}, {"pairs", pairs}};
}
inline Diagram diagram_from_json(const json& j) {
    int r = j.at("r").get<int>(), s = j.at("s").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& pr : j.at("pairs")) pairs.emplace_back(pr.at(0).get<int>() - 1, pr.at(1).get<int>() - 1);
    return Diagram(r, s, std::move(pairs));
}

inline json to_json(const SignedDiagram& sd) {
    if (sd.zero) return json{{"zero", true}};
    json j = to_json(sd.d);
    j["sign"] = sd.sign;
    return j;
}

/// {"n":, "p":, "terms": [{"diagram":, "coeff": "string"}]}
template <class K>
json element_to_json(const Element<K>& a) {
    json terms = json::array();
    for (const auto& [d, c] : a.terms) terms.push_back(json{{"diagram", to_json(d)}, {"coeff", FieldOps<K>::str(c)}});
    std::uint64_t p = FieldOps<K>::characteristic(a.tag);
    return json{{"n", a.r}, {"p", p}, {"terms", terms}};
}

inline json to_json(const BlockDecomposition& dec) {
    json blocks = json::array();
    for (const auto& blk : dec.blocks) {
        json b = json::array();
        for (const auto& lam : blk) b.push_back(to_json(lam));
        blocks.push_back(b);
    }
    return json{{"n", dec.n}, {"p", dec.p}, {"provenance", dec.provenance}, {"blocks", blocks}};
}

} // namespace pba
