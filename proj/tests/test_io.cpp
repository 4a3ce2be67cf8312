#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "latmix/errors.hpp"
#include "latmix/io.hpp"

using namespace latmix;
using namespace latmix::testing;

TEST_CASE("json collection parsing") {
    auto doc = parse_collection(R"({"ambient_dim":1,"supports":[[[0],[2]],[[1],[3]]]})");
    CHECK(doc.collection.ambient_dim == 1);
    CHECK(doc.collection.size() == 2);
    CHECK(doc.warnings.empty());

    CHECK_THROWS_WITH_AS(
        (void)parse_collection(R"({"ambient_dim":2,"supports":[[[0,0]],[[1]]]})"),
        doctest::Contains("support 2, point 1"), ParseError);
    CHECK_THROWS_WITH_AS((void)parse_collection(R"({"ambient_dim":2,"supports":[[]]})"),
                         doctest::Contains("nonempty"), ParseError);
    CHECK_THROWS_AS((void)parse_collection("{not json"), ParseError);
    CHECK_THROWS_AS((void)parse_collection(""), ParseError);
    CHECK_THROWS_AS((void)parse_collection(R"({"ambient_dim":0,"supports":[[[0]]]})"),
                    ParseError);
}

TEST_CASE("duplicate points produce warnings and are removed") {
    auto doc = parse_collection(R"({"ambient_dim":1,"supports":[[[0],[0],[2]]]})");
    REQUIRE(doc.warnings.size() == 1);
    CHECK(doc.collection.supports[0].rows == 2);
}

TEST_CASE("text collection parsing") {
    auto doc = parse_collection("# a comment\n(0,0) (1,0)  # trailing comment\n(0,0) (0,1)\n");
    CHECK(doc.collection.ambient_dim == 2);
    CHECK(doc.collection.size() == 2);

    auto neg = parse_collection("(-3, 5) (2, -7)\n");
    CHECK(neg.collection.point(0, 0) == std::vector<Int>{-3, 5});

    CHECK_THROWS_WITH_AS((void)parse_collection("(0,0) (1)\n"), doctest::Contains("line 1"),
                         ParseError);
    CHECK_THROWS_AS((void)parse_collection("0 1\n"), ParseError);
}

TEST_CASE("metadata fields") {
    auto doc = parse_collection(
        R"({"ambient_dim":1,"supports":[[[0]]],"name":"probe","labels":["f1"]})");
    CHECK(doc.name == "probe");
    CHECK(doc.labels == std::vector<std::string>{"f1"});
    CHECK_THROWS_AS((void)parse_collection(
                        R"({"ambient_dim":1,"supports":[[[0]]],"labels":["a","b"]})"),
                    ParseError);
}

TEST_CASE("serialization round trips and stays canonical") {
    auto doc = parse_collection(R"({"ambient_dim":2,"supports":[[[1,1],[0,0]],[[0,1]]]})");
    auto j = collection_to_json(doc);
    auto doc2 = parse_collection(j.dump());
    CHECK(collection_to_json(doc2).dump() == j.dump());
    // Points are stored sorted, so serialization is order-independent.
    auto swapped = parse_collection(R"({"ambient_dim":2,"supports":[[[0,0],[1,1]],[[0,1]]]})");
    CHECK(collection_to_json(swapped).dump() == j.dump());
    CHECK(input_digest(swapped) == input_digest(doc));

    auto other = parse_collection(R"({"ambient_dim":2,"supports":[[[0,0],[1,2]],[[0,1]]]})");
    CHECK(input_digest(other) != input_digest(doc));
}

TEST_CASE("report json is stable under reparse") {
    auto doc = parse_collection(R"({"ambient_dim":1,"supports":[[[0],[2]],[[1],[3]]]})");
    auto body = invariant_report_to_json(full_report(doc.collection));
    std::string text = body.dump(2);
    CHECK(nlohmann::json::parse(text).dump(2) == text);
    CHECK(body["invariants"]["root_count"] == 2);
    CHECK(body["defects"]["minimal_defect"] == -1);
    CHECK(body["defects"]["essential"] == nlohmann::json::array({1, 2}));
    CHECK(body["defects"]["essential_index"] == 2);
}

TEST_CASE("report document wrapper") {
    auto doc = parse_collection(R"({"ambient_dim":1,"supports":[[[0],[2]],[[1],[3]]]})");
    auto body = defect_report_to_json(build_defect_report(doc.collection), 2);
    auto wrapped = report_document(body, doc, 7);
    CHECK(wrapped["version"] == kToolVersion);
    CHECK(wrapped["timing_ms"] == 7);
    CHECK(wrapped["input_digest"] == input_digest(doc));
    CHECK(wrapped["report"] == body);
}

TEST_CASE("polytope serialization uses sorted vertices and exact rationals") {
    auto p = convex_hull({{Rat(1, 2), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(1, 2)}}, 2);
    auto j = polytope_to_json(p);
    CHECK(j["vertices"].size() == 3);
    CHECK(j["vertices"][0] == nlohmann::json::array({0, 0}));
    CHECK(j["vertices"][1][1] == "1/2");
    CHECK(j["lattice_volume"] == "1/8");
    CHECK(rational_to_string(Rat(-3, 4)) == "-3/4");
    CHECK(rational_to_string(Rat(5)) == "5");
}
