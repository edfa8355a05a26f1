#pragma once

#include <string>

#include "json.hpp"
#include "qcolor/coloring.hpp"
#include "qcolor/group.hpp"

namespace qcolor {

// Wire names for Method values: "criterion", "bruteforce", "predicate",
// "reduction".
std::string method_name(Method m);

// Wire names for Caveat values: "SUFFICIENCY_UNVERIFIED", "P2_EXPERIMENTAL",
// "UNKNOT".
std::string caveat_name(Caveat c);

// A tuple serializes as a JSON array of element strings in the group's
// display grammar.
nlohmann::json tuple_to_json(const ColoringTuple& tuple);

// Parses a JSON array of element strings back into a tuple over ctx.
// Throws ParseError when the document is not an array of strings, and
// propagates element parse errors.
ColoringTuple tuple_from_json(const GroupContext& ctx, const nlohmann::json& doc);

// Verdict object:
//   {"colorable": bool, "method": str, "witness": null|object,
//    "prime_pair": null|[p,q], "caveats": [str...]}
// A pair witness renders as {"u": str, "x0": str, "p": int}; a tuple witness
// as {"tuple": [str...]}.
nlohmann::json verdict_to_json(const GroupContext& ctx, const Verdict& v);

}  // namespace qcolor
