#include <doctest.h>

#include <fstream>
#include <sstream>

#include "slopekit/error.hpp"
#include "slopekit/io.hpp"

using namespace slopekit;

namespace {

std::string parse_error(const std::string& src) {
    try {
        parse_presentation(src);
    } catch (const Error& e) {
        CHECK(e.kind() == "parse");
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("text presentations") {
    const GroupPresentation p = parse_presentation("# torus\n\ngenerators: a b\nrelator: a b A B\n");
    CHECK(p.generator_count() == 2);
    REQUIRE(p.relator_count() == 1);
    CHECK(p.relators()[0] == Word{1, 2, -1, -2});
    CHECK(abelianization(p).free_rank == 2);

    const GroupPresentation trefoil = parse_presentation("generators: x y\nrelator: x y x Y X Y\n");
    CHECK(trefoil.generator_names() == std::vector<std::string>{"x", "y"});
    CHECK(abelianization(trefoil).free_rank == 1);

    const GroupPresentation free = parse_presentation("generators: a b\n");
    CHECK(free.relator_count() == 0);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error("generators: a b\nrelator: a c\n").find("line 2") != std::string::npos);
    CHECK(parse_error("relator: a b\n").find("line 1") != std::string::npos);
    CHECK(parse_error("generators: a b\n\nrelator: a A\n").find("line 3") != std::string::npos);
    CHECK_FALSE(parse_error("generators: A\n").empty());
}

TEST_CASE("json presentations") {
    const GroupPresentation p = parse_presentation(R"({"generators": ["x", "y"], "relators": [["x", "y", "x", "Y", "X", "Y"]]})");
    CHECK(p == presentations::trefoil());
    const GroupPresentation s = parse_presentation(R"({"generators": ["a", "b"], "relators": ["a b A B"]})");
    CHECK(s.relators()[0] == Word{1, 2, -1, -2});
    CHECK_THROWS_AS(parse_presentation("{\"generators\": "), Error);
    const GroupPresentation back = parse_presentation(presentation_to_json(p).dump());
    CHECK(back == p);
    CHECK(parse_presentation(format_presentation(p)) == p);
}

TEST_CASE("report round trip") {
    const JumpingLocusReport r = scan_jumping_loci(presentations::trefoil(), 12);
    const JumpingLocusReport back = report_from_json(report_to_json(r));
    CHECK(back.entries == r.entries);
    CHECK(back.exponent == r.exponent);
    CHECK(back.scan_bound == r.scan_bound);

    Json bad = report_to_json(r);
    bad["exponent"] = 5;
    CHECK_THROWS_AS(report_from_json(bad), Error);
    const JumpingLocusReport trivial = report_from_json(Json::parse(R"({"scan_bound":100,"b1":2,"entries":[]})"));
    CHECK(trivial.exponent == 1);
}

TEST_CASE("epimorphism and invariants json") {
    const AbelianEpimorphism alpha(2, {2, 4}, {{1, 0}, {1, 3}});
    const AbelianEpimorphism back = epimorphism_from_json(epimorphism_to_json(alpha));
    CHECK(back.factors() == alpha.factors());
    CHECK(back.matrix() == alpha.matrix());
    const AbelianEpimorphism implicit = epimorphism_from_json(Json::parse(R"({"factors":[3],"matrix":[[1,2]]})"));
    CHECK(implicit.source_rank() == 2);
    CHECK_THROWS_AS(epimorphism_from_json(Json::parse(R"({"factors":[4],"matrix":[[2,2]]})")), Error);

    const SurfaceInvariants x = SurfaceInvariants::create(162, 20, 2, 21);
    CHECK(invariants_from_json(invariants_to_json(x)) == x);
    CHECK_THROWS_AS(invariants_from_json(Json::parse(R"({"K2":9,"chi":2,"q":1,"pg":1})")), Error);
}

TEST_CASE("trivial loci data file") {
    std::ifstream in(std::string(SLOPEKIT_DATA_DIR) + "/cartwright_steger_trivial_loci.json");
    REQUIRE(in);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const JumpingLocusReport w = report_from_json(Json::parse(buffer.str()));
    CHECK(w.entries.empty());
    CHECK(w.exponent == 1);
    const CoverBetti b = hironaka_b1(w.b1, w, AbelianEpimorphism(2, {5, 10}, {{1, 0}, {0, 1}}));
    CHECK(b.b1 == 2);
    CHECK_FALSE(b.warning);
}
