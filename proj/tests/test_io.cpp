#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "latgeo/io.hpp"

using namespace latgeo;

TEST_CASE("point set round trip") {
    PointSet s(2);
    s.insert({0, 0});
    s.insert({-3, 7});
    s.insert({1, -2});
    std::string text = pointset_to_string(s);
    std::istringstream in(text);
    PointSet back = load_pointset(in);
    CHECK(back == s);
}

TEST_CASE("point set golden format") {
    PointSet s(2);
    s.insert({1, 2});
    s.insert({0, 0});
    CHECK(pointset_to_string(s) == "2 2\n0 0\n1 2\n");
}

TEST_CASE("point set parse errors carry line numbers") {
    {
        std::istringstream in("x y\n");
        CHECK_THROWS_AS(load_pointset(in), ParseError);
    }
    {
        std::istringstream in("2 2\n0 0\n1\n");
        try {
            load_pointset(in);
            CHECK(false);
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }
    }
}

TEST_CASE("h-rep round trip with rationals") {
    HRep p;
    p.dim = 2;
    p.add_row({make_q(1, 3), make_q(-2)}, make_q(7, 2));
    p.add_row({make_q(0), make_q(1)}, make_q(5));
    std::string text = hrep_to_string(p);
    std::istringstream in(text);
    HRep back = load_hrep(in);
    REQUIRE(back.dim == 2);
    REQUIRE(back.rows.size() == 2);
    CHECK(back.rows[0].normal[0] == make_q(1, 3));
    CHECK(back.rows[0].offset == make_q(7, 2));
    CHECK(back.rows[1].normal[1] == 1);
}

TEST_CASE("h-rep golden format") {
    HRep p;
    p.dim = 2;
    p.add_row({make_q(1), make_q(0)}, make_q(3, 2));
    CHECK(hrep_to_string(p) == "1 2\n1 0 | 3/2\n");
}

TEST_CASE("h-rep rejects malformed rows") {
    {
        std::istringstream in("1 2\n1 0 3\n");  // missing separator
        CHECK_THROWS_AS(load_hrep(in), ParseError);
    }
    {
        std::istringstream in("1 2\n1 | 3\n");  // too few coefficients
        CHECK_THROWS_AS(load_hrep(in), ParseError);
    }
    {
        std::istringstream in("2 2\n1 0 | 1\n");  // missing row
        CHECK_THROWS_AS(load_hrep(in), ParseError);
    }
}
