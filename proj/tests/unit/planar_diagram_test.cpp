#include "doctest.h"
#include "gpv/planar_diagram.hpp"

using namespace gpv;

TEST_SUITE("diagram") {
  TEST_CASE("gauss to planar and back") {
    for (const char* code : {"", "O1+ U1+", "O1+ U2+ O3+ U1+ O2+ U3+", "O1+ U2- O3- U1+ O4+ U3- O2- U4+"}) {
      const auto d = parse_gauss(code);
      const auto pd = planar_from_gauss(d);
      CHECK(pd.crossings.size() == d.chord_count());
      CHECK(pd.strand.size() == 2 * d.chord_count() + 1);
      CHECK_NOTHROW(validate(pd));
      CHECK(gauss_from_planar(pd) == d);
    }
  }

  TEST_CASE("crossing layout") {
    const auto pd = planar_from_gauss(parse_gauss("O1+ U1+"));
    REQUIRE(pd.crossings.size() == 1);
    CHECK(pd.crossings[0].arcs == std::array<int, 4>{2, 2, 3, 1});
    const auto neg = planar_from_gauss(parse_gauss("O1- U1-"));
    CHECK(neg.crossings[0].arcs == std::array<int, 4>{2, 1, 3, 2});
  }

  TEST_CASE("double crossings keep their kind") {
    const auto pd = planar_from_gauss(parse_gauss("DO1+ O2- DU1+ U2-"));
    CHECK(pd.double_count() == 1);
    CHECK(gauss_from_planar(pd) == parse_gauss("DO1+ O2- DU1+ U2-"));
  }

  TEST_CASE("switch_planar") {
    const auto d = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
    const auto pd = planar_from_gauss(d);
    CHECK(gauss_from_planar(switch_planar(pd, 0)) == switch_crossing(d, 0));
  }

  TEST_CASE("json round trip") {
    const auto pd = planar_from_gauss(parse_gauss("O1+ U2- O3- U1+ O4+ U3- O2- U4+"));
    const auto text = to_json(pd);
    CHECK(text.find("\"convention\": \"pd-ccw-under-in\"") != std::string::npos);
    CHECK(planar_from_json(text) == pd);
  }

  TEST_CASE("json errors") {
    CHECK_THROWS_AS(planar_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(planar_from_json(R"({"convention":"pd-cw","crossings":[],"strand":[1]})"), std::invalid_argument);
    CHECK_THROWS_AS(planar_from_json(R"({"crossings":[{"arcs":[1,2,2,1],"sign":1}],"strand":[1,2]})"),
                    std::invalid_argument);
    CHECK_NOTHROW(planar_from_json(R"({"crossings":[],"strand":[1]})"));
  }
}
