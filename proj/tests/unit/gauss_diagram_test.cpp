#include <vector>

#include "doctest.h"
#include "gpv/gauss_diagram.hpp"
#include "gpv/oracle.hpp"
#include "gpv/planar_diagram.hpp"

using namespace gpv;

namespace {
constexpr const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
}

TEST_SUITE("diagram") {
  TEST_CASE("parse") {
    const auto kink = parse_gauss("O1+ U1+");
    CHECK(kink.chord_count() == 1);
    CHECK(kink.chord(0).sign == 1);
    CHECK(kink.first_role(0) == Role::Over);

    const auto t = parse_gauss(kTrefoil);
    CHECK(t.chord_count() == 3);
    CHECK(t.real_count() == 3);

    const auto virt = parse_gauss("O1+ U2+ U1+ O2+");
    CHECK(virt.key() == "O1+ U2+ U1+ O2+");

    const auto mixed = parse_gauss("DO1- O2+ DU1- U2+");
    CHECK(mixed.double_count() == 1);
    CHECK(mixed.real_count() == 1);
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_gauss("O1+ U1-"), ParseError);
    CHECK_THROWS_AS(parse_gauss("O1+"), ParseError);
    CHECK_THROWS_AS(parse_gauss("O1+ O1+"), ParseError);
    CHECK_THROWS_AS(parse_gauss("X1+ U1+"), ParseError);
    CHECK_THROWS_AS(parse_gauss("DO1+ U1+"), ParseError);
    CHECK_THROWS_AS(parse_gauss("O1 U1"), ParseError);
  }

  TEST_CASE("canonical key") {
    CHECK(parse_gauss("O7- U7-").key() == "O1- U1-");
    CHECK(parse_gauss("U2+ O1+ U1+ O2+") == parse_gauss("U1+ O2+ U2+ O1+"));
    CHECK(parse_gauss("").key().empty());
    CHECK(GaussDiagram{}.key().empty());
    for (const char* code : {kTrefoil, "DO1+ O2- DU1+ U2-", "U1- DO2+ O1- DU2+"}) {
      const auto d = parse_gauss(code);
      CHECK(parse_gauss(d.key()) == d);
    }
  }

  TEST_CASE("switch_crossing") {
    const auto kink = parse_gauss("O1+ U1+");
    CHECK(switch_crossing(kink, 0).key() == "U1- O1-");
    const auto t = parse_gauss(kTrefoil);
    for (std::uint32_t i = 0; i < 3; ++i) CHECK(switch_crossing(switch_crossing(t, i), i) == t);
    CHECK(c2(planar_from_gauss(switch_crossing(t, 0))) == 0);
  }

  TEST_CASE("resolve_double") {
    const auto r = resolve_double(parse_gauss("DO1+ DU1+"), 0);
    CHECK(r.size() == 2);
    CHECK(r.coeff(parse_gauss("O1+ U1+")) == 1);
    CHECK(r.coeff(parse_gauss("U1- O1-")) == -1);

    const auto two = parse_gauss("DO1+ DO2- DU1+ DU2-");
    FormalSum<GaussDiagram> all;
    for (const auto& [d, c] : resolve_double(two, 0))
      for (const auto& [e, c2] : resolve_double(d, 1)) all.add(e, c * c2);
    CHECK(all.size() == 4);
    CHECK(all.coeff(parse_gauss("O1+ O2- U1+ U2-")) == 1);
    CHECK(all.coeff(parse_gauss("U1- O2- O1- U2-")) == -1);
    CHECK(all.coeff(parse_gauss("O1+ U2+ U1+ O2+")) == -1);
    CHECK(all.coeff(parse_gauss("U1- U2+ O1- O2+")) == 1);
  }

  TEST_CASE("make_double inverts the positive resolution") {
    const auto t = parse_gauss(kTrefoil);
    const auto d = make_double(t, 1);
    CHECK(d.double_count() == 1);
    const auto r = resolve_double(d, 1);
    CHECK(r.coeff(t) == 1);
    CHECK(r.coeff(switch_crossing(t, 1)) == -1);
  }

  TEST_CASE("subdiagram") {
    const auto t = parse_gauss(kTrefoil);
    const std::vector<std::uint32_t> all{0, 1, 2};
    CHECK(subdiagram(t, all) == t);
    const std::vector<std::uint32_t> keep{1, 2};
    CHECK(subdiagram(t, keep).key() == "U1+ O2+ O1+ U2+");
    CHECK(subdiagram_mask(t, 0b110) == subdiagram(t, keep));
    const auto doubles = parse_gauss("DO1+ DO2- DU1+ DU2-");
    CHECK(subdiagram(doubles, {}) == doubles);
    CHECK(subdiagram(t, {}).empty());
  }

  TEST_CASE("positions") {
    const auto t = parse_gauss(kTrefoil);
    CHECK(t.first_position(0) == 0);
    CHECK(t.second_position(0) == 3);
    CHECK(t.first_role(1) == Role::Under);
    CHECK(real_chords(parse_gauss("DO1+ O2+ DU1+ U2+")) == std::vector<std::uint32_t>{1});
  }
}
