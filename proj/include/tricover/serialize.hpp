#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "covers.hpp"

namespace tricover {

using json = nlohmann::ordered_json;

/// Arbitrary-precision values are emitted as JSON numbers while they fit
/// the double-exact range, as decimal strings beyond it.
inline json big_to_json(const bigint& v) {
    static const bigint js_max = (bigint(1) << 53) - 1;
    if (boost::multiprecision::abs(v) <= js_max) return v.convert_to<std::int64_t>();
    return v.str();
}

inline json to_json(const GroupId& id) {
    json j;
    j["label"] = id.label();
    switch (id.kind) {
        case GroupId::Kind::dihedral: j["s"] = id.s; break;
        case GroupId::Kind::sl2:
        case GroupId::Kind::psl2:
            j["p"] = id.p;
            j["m"] = id.m;
            break;
        case GroupId::Kind::cyclic: j["n"] = id.s; break;
        case GroupId::Kind::unknown: j["order"] = id.s; break;
        default: break;
    }
    return j;
}

inline json coeffs_to_json(const ModPoly& g) {
    json arr = json::array();
    for (auto c : g.coeffs()) arr.push_back(c);
    return arr;
}

inline json to_json(const PrimeIdeal& I, int index) {
    json j;
    j["index"] = index;
    j["p"] = I.p;
    j["g_coeffs"] = coeffs_to_json(I.g);
    j["e"] = I.e;
    j["f"] = I.f;
    return j;
}

inline json to_json(const CycleType& t) {
    json arr = json::array();
    for (auto l : t.lengths) arr.push_back(l);
    return arr;
}

inline json to_json(const CoverReport& rep) {
    json j;
    j["q"] = rep.q;
    j["p"] = rep.p;
    json ideal;
    ideal["index"] = rep.ideal_index;
    ideal["g_coeffs"] = coeffs_to_json(rep.ideal.g);
    ideal["e"] = rep.ideal.e;
    ideal["f"] = rep.ideal.f;
    j["ideal"] = ideal;
    j["residue_order"] = big_to_json(rep.residue->order());
    j["galois"] = to_json(rep.galois);
    j["index_mu_bar"] = big_to_json(rep.index_mu_bar);
    j["degenerate"] = rep.degenerate;
    j["genus_full"] = rep.genus_full ? big_to_json(*rep.genus_full) : json(nullptr);
    j["genus_borel"] = rep.genus_borel ? big_to_json(*rep.genus_borel) : json(nullptr);
    json rams = json::array();
    for (const auto& r : rep.ramification) {
        json jr;
        jr["base"] = base_point_name(r.base);
        json fiber = json::array();
        for (const auto& [count, e] : r.fiber) {
            json pt;
            pt["count"] = big_to_json(count);
            pt["e"] = big_to_json(e);
            fiber.push_back(pt);
        }
        jr["fiber"] = fiber;
        rams.push_back(jr);
    }
    j["ramification"] = rams;
    if (rep.borel_monodromy) {
        json m;
        m["infinity"] = to_json((*rep.borel_monodromy)[0]);
        m["one"] = to_json((*rep.borel_monodromy)[1]);
        m["elliptic"] = to_json((*rep.borel_monodromy)[2]);
        j["borel_monodromy"] = m;
    }
    j["oracle_checked"] = rep.oracle_checked;
    if (rep.p2_extrapolated) j["p2_extrapolated"] = true;
    return j;
}

inline json minpoly_json(const IntPoly& T) {
    json arr = json::array();
    for (const auto& c : T.coeffs()) arr.push_back(big_to_json(c));
    return arr;
}

}  // namespace tricover
