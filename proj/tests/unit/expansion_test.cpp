#include <random>
#include <set>

#include "doctest.h"
#include "gpv/expansion.hpp"

using namespace gpv;

namespace {
GaussDiagram g(const char* code) { return parse_gauss(code); }
}  // namespace

TEST_SUITE("expansion") {
  TEST_CASE("s") {
    const auto kink = g("O1+ U1+");
    DiagramSum expected(kink);
    expected.add(GaussDiagram{}, 1);
    CHECK(s(kink) == expected);

    const auto t = s(g("O1+ U2+ O3+ U1+ O2+ U3+"));
    Coeff total = 0;
    for (const auto& [d, c] : t) total += c;
    CHECK(total == 8);
    CHECK(t.coeff(GaussDiagram{}) == 1);
    CHECK(t.coeff(g("O1+ U1+")) == 2);
  }

  TEST_CASE("s preserves the double point relation") {
    const auto r = resolve_double(g("DO1+ DU1+"), 0);
    CHECK(s(r) == r);
    CHECK(s(g("DO1+ DU1+")) == DiagramSum(g("DO1+ DU1+")));
  }

  TEST_CASE("s_inv") {
    DiagramSum expected(g("O1+ U1+"));
    expected.add(GaussDiagram{}, -1);
    CHECK(s_inv(g("O1+ U1+")) == expected);
    CHECK(s_inv(s(g("O1+ U1+"))) == DiagramSum(g("O1+ U1+")));
    CHECK(s_inv(GaussDiagram{}) == DiagramSum(GaussDiagram{}));

    const auto d = g("O1+ U2- U1+ O2-");
    const auto x = s_inv(d);
    CHECK(x.size() == 4);
    CHECK(x.coeff(d) == 1);
    CHECK(x.coeff(g("O1+ U1+")) == -1);
    CHECK(x.coeff(g("U1- O1-")) == -1);
    CHECK(x.coeff(GaussDiagram{}) == 1);
  }

  TEST_CASE("s and s_inv are inverse on random diagrams") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
      const auto d = random_diagram(rng, 1 + i % 6, i % 3 == 0 ? 1 : 0);
      CHECK(s_inv(s(d)) == DiagramSum(d));
      CHECK(s(s_inv(d)) == DiagramSum(d));
    }
  }

  TEST_CASE("enumerate") {
    const auto e0 = enumerate(0);
    REQUIRE(e0.size() == 1);
    CHECK(e0[0].key().empty());
    CHECK(enumerate(1).size() == 5);
    CHECK(diagram_count(0) == 1);
    CHECK(diagram_count(1) == 4);
    CHECK(diagram_count(2) == 48);
    CHECK(diagram_count(3) == 960);
    const auto e2 = enumerate(2);
    CHECK(e2.size() == 53);
    std::set<GaussDiagram> distinct(e2.begin(), e2.end());
    CHECK(distinct.size() == e2.size());
    for (std::size_t i = 1; i < e2.size(); ++i) CHECK(e2[i - 1].key() < e2[i].key());
  }

  TEST_CASE("random_diagram") {
    std::mt19937_64 rng(3);
    const auto d = random_diagram(rng, 5, 2);
    CHECK(d.chord_count() == 5);
    CHECK(d.double_count() == 2);
    CHECK_THROWS(random_diagram(rng, 1, 2));
  }

  TEST_CASE("eval_formula") {
    FormulaTable empty;
    CHECK(eval_formula(empty, g("O1+ U2+ O3+ U1+ O2+ U3+")) == 0);

    FormulaTable constant;
    constant.set(GaussDiagram{}, 1);
    CHECK(eval_formula(constant, g("O1+ U2+ O3+ U1+ O2+ U3+")) == 1);
    CHECK(eval_formula(constant, GaussDiagram{}) == 1);

    FormulaTable count_kinks;
    count_kinks.set(g("O1+ U1+"), 1);
    CHECK(eval_formula(count_kinks, g("O1+ U2+ O3+ U1+ O2+ U3+")) == 2);
  }

  TEST_CASE("formula table json") {
    FormulaTable t;
    t.degree = 2;
    t.invariant = "c2";
    t.set(g("O1+ U2+ U1+ O2+"), 1);
    t.set(g("O1- U2- U1- O2-"), -1);
    t.set(g("O1+ U1+"), 0);
    CHECK(t.entries.size() == 2);
    const auto back = formula_table_from_json(to_json(t));
    CHECK(back.degree == 2);
    CHECK(back.invariant == "c2");
    CHECK(back.entries == t.entries);
  }
}
