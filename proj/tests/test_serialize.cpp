#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcolor/errors.hpp"
#include "qcolor/serialize.hpp"
#include "qcolor/transforms.hpp"

using namespace qcolor;

TEST_CASE("method and caveat wire names") {
    CHECK(method_name(Method::Criterion) == "criterion");
    CHECK(method_name(Method::BruteForce) == "bruteforce");
    CHECK(method_name(Method::Predicate) == "predicate");
    CHECK(method_name(Method::Reduction) == "reduction");
    CHECK(caveat_name(Caveat::SufficiencyUnverified) == "SUFFICIENCY_UNVERIFIED");
    CHECK(caveat_name(Caveat::P2Experimental) == "P2_EXPERIMENTAL");
    CHECK(caveat_name(Caveat::Unknot) == "UNKNOT");
}

TEST_CASE("tuple round trip") {
    GroupContext s3(GroupFamily::Symmetric, 3);
    ColoringTuple x(s3, {s3.parse_element("(2 3)"), s3.parse_element("(1 2)"),
                         s3.parse_element("(1 3)")});
    nlohmann::json doc = tuple_to_json(x);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 3);
    CHECK(doc[0] == "(2 3)");
    CHECK(doc[1] == "(1 2)");
    CHECK(doc[2] == "(1 3)");
    CHECK(tuple_from_json(s3, doc) == x);

    GroupContext d6(GroupFamily::Dihedral, 6);
    ColoringTuple w(d6, {d6.parse_element("s"), d6.parse_element("r^2")});
    CHECK(tuple_from_json(d6, tuple_to_json(w)) == w);
}

TEST_CASE("tuple parsing rejects malformed documents") {
    GroupContext s3(GroupFamily::Symmetric, 3);
    CHECK_THROWS_AS(tuple_from_json(s3, nlohmann::json::object()), ParseError);
    CHECK_THROWS_AS(tuple_from_json(s3, nlohmann::json::array()), ParseError);
    CHECK_THROWS_AS(tuple_from_json(s3, nlohmann::json::parse("[1,2]")), ParseError);
    CHECK_THROWS_AS(tuple_from_json(s3, nlohmann::json::parse("[\"(1 2\"]")), ParseError);
    CHECK_THROWS_AS(tuple_from_json(s3, nlohmann::json::parse("[\"(1 4)\"]")), ParseError);
}

TEST_CASE("verdict serialization shapes") {
    GroupContext s3(GroupFamily::Symmetric, 3);

    nlohmann::json pos = verdict_to_json(s3, decide_general(s3, 2, 3));
    CHECK(pos["colorable"] == true);
    CHECK(pos["method"] == "reduction");
    CHECK(pos["witness"]["u"] == "(1 2 3)");
    CHECK(pos["witness"]["x0"] == "(2 3)");
    CHECK(pos["witness"]["p"] == 3);
    CHECK(pos["prime_pair"] == nlohmann::json::array({2, 3}));
    CHECK(pos["caveats"] == nlohmann::json::array({"SUFFICIENCY_UNVERIFIED"}));

    nlohmann::json neg = verdict_to_json(s3, decide_general(s3, 2, 5));
    CHECK(neg["colorable"] == false);
    CHECK(neg["witness"].is_null());
    CHECK(neg["prime_pair"].is_null());

    nlohmann::json unknot = verdict_to_json(s3, decide_general(s3, 1, 5));
    CHECK(unknot["caveats"] == nlohmann::json::array({"UNKNOT"}));

    Verdict oracle = brute_force_search(s3, TorusKnot(2, 3));
    nlohmann::json with_tuple = verdict_to_json(s3, oracle);
    CHECK(with_tuple["colorable"] == true);
    CHECK(with_tuple["method"] == "bruteforce");
    REQUIRE(with_tuple["witness"].contains("tuple"));
    CHECK(with_tuple["witness"]["tuple"].size() == 3);
    CHECK(with_tuple["caveats"].empty());
}
