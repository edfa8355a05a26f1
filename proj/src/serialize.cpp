#include "qcolor/serialize.hpp"

#include "qcolor/errors.hpp"

namespace qcolor {

std::string method_name(Method m) {
    switch (m) {
        case Method::Criterion: return "criterion";
        case Method::BruteForce: return "bruteforce";
        case Method::Predicate: return "predicate";
        case Method::Reduction: return "reduction";
    }
    throw Error("internal error: unknown method");
}

std::string caveat_name(Caveat c) {
    switch (c) {
        case Caveat::SufficiencyUnverified: return "SUFFICIENCY_UNVERIFIED";
        case Caveat::P2Experimental: return "P2_EXPERIMENTAL";
        case Caveat::Unknot: return "UNKNOT";
    }
    throw Error("internal error: unknown caveat");
}

nlohmann::json tuple_to_json(const ColoringTuple& tuple) {
    nlohmann::json arr = nlohmann::json::array();
    for (uint64_t i = 0; i < tuple.size(); ++i) {
        arr.push_back(tuple.context().format(tuple.at(i)));
    }
    return arr;
}

ColoringTuple tuple_from_json(const GroupContext& ctx, const nlohmann::json& doc) {
    if (!doc.is_array() || doc.empty()) {
        throw ParseError("tuple document must be a nonempty JSON array of element strings");
    }
    std::vector<GroupElement> colors;
    colors.reserve(doc.size());
    for (const auto& item : doc) {
        if (!item.is_string()) {
            throw ParseError("tuple document must be a nonempty JSON array of element strings");
        }
        colors.push_back(ctx.parse_element(item.get<std::string>()));
    }
    return ColoringTuple(ctx, std::move(colors));
}

nlohmann::json verdict_to_json(const GroupContext& ctx, const Verdict& v) {
    nlohmann::json out;
    out["colorable"] = v.colorable;
    out["method"] = method_name(v.method);
    if (v.pair_witness) {
        out["witness"] = {
            {"u", ctx.format(v.pair_witness->u)},
            {"x0", ctx.format(v.pair_witness->x0)},
            {"p", v.pair_witness->p},
        };
    } else if (v.tuple_witness) {
        out["witness"] = {{"tuple", tuple_to_json(*v.tuple_witness)}};
    } else {
        out["witness"] = nullptr;
    }
    if (v.prime_pair) {
        out["prime_pair"] = {v.prime_pair->first, v.prime_pair->second};
    } else {
        out["prime_pair"] = nullptr;
    }
    nlohmann::json caveats = nlohmann::json::array();
    for (Caveat c : v.caveats) caveats.push_back(caveat_name(c));
    out["caveats"] = caveats;
    return out;
}

}  // namespace qcolor
