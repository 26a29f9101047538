#include <random>

#include "doctest.h"
#include "gpv/projection.hpp"

using namespace gpv;

namespace {
GaussDiagram g(const char* code) { return parse_gauss(code); }
constexpr const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
constexpr const char* kFigureEight = "O1+ U2- O3- U1+ O4+ U3- O2- U4+";

Coeff c2_sum(const FormalSum<PlanarDiagram>& x) { return eval_singular(x, c2_invariant()); }
}  // namespace

TEST_SUITE("projection") {
  TEST_CASE("step1_descend") {
    const auto over = cut_tree(g("O1+ O2- U1+ U2-"));
    CHECK(step1_descend(over) == FormalSum<Tree>(over));

    const auto one = step1_descend(cut_tree(g("U1+ O1+")));
    REQUIRE(one.size() == 2);
    for (const auto& [t, c] : one) {
      const auto d = glue_tree(t);
      if (d.double_count() == 0) {
        CHECK(c == 1);
        CHECK(d == g("O1- U1-"));
      } else {
        CHECK(c == -1);
        CHECK(d == g("DO1- DU1-"));
      }
    }

    CHECK(step1_descend(cut_tree(g("U1+ U2- O1+ O2-"))).size() == 4);
  }

  TEST_CASE("step1 is the crossing change relation") {
    const auto d = g("U1+ O1+");
    DiagramSum rebuilt;
    for (const auto& [t, c] : step1_descend(cut_tree(d))) {
      const auto e = glue_tree(t);
      rebuilt.add(e.double_count() ? resolve_double(e, 0) : DiagramSum(e), c);
    }
    CHECK(rebuilt == DiagramSum(d));
  }

  TEST_CASE("step2") {
    const auto clumped = cut_tree(g("DO1+ DO2+ DU1+ DU2+"));
    CHECK_FALSE(step2_applicable(clumped));
    CHECK_THROWS_AS(step2_clump(clumped), std::invalid_argument);

    const auto loose = cut_tree(g("DO1+ O2+ DO3+ DU1+ U2+ DU3+"));
    REQUIRE(step2_applicable(loose));
    const auto moved = step2_clump(loose);
    CHECK(glue_tree(moved) == g("DO1+ DO2+ O3+ DU1+ U3+ DU2+"));
    CHECK(is_descending(moved));
    CHECK(eval_singular(cap(loose), c2_invariant()) == eval_singular(cap(moved), c2_invariant()));
  }

  TEST_CASE("normalize") {
    const auto desc = cut_tree(g("O1+ O2- U1+ U2-"));
    const auto n0 = normalize(desc, 2);
    CHECK(n0.terms == FormalSum<Tree>(desc));
    CHECK(n0.discarded == 0);

    const auto n1 = normalize(cut_tree(g("U1+ O1+")), 2);
    CHECK(n1.terms.size() == 2);
    CHECK(n1.discarded == 0);
    for (const auto& [t, c] : n1.terms) CHECK(is_descending(t));

    const auto deep = normalize(cut_tree(g("U1+ U2+ U3+ O1+ O2+ O3+")), 2);
    CHECK(deep.discarded > 0);
    for (const auto& [t, c] : deep.terms) CHECK(glue_tree(t).double_count() <= 2);
  }

  TEST_CASE("cap") {
    CHECK(cap(cut_tree(GaussDiagram{})).crossings.empty());
    const auto t = cap(cut_tree(g(kTrefoil)));
    CHECK(c2(t) == 1);
    CHECK(alexander(t).to_string() == "t - 1 + t^-1");
    CHECK(c2(cap(cut_tree(g(kFigureEight)), Routing::Reverse)) == -1);
    CHECK(routing_from_name("reverse") == Routing::Reverse);
    CHECK_THROWS_AS(routing_from_name("sideways"), std::invalid_argument);
  }

  TEST_CASE("P") {
    const auto empty = P(GaussDiagram{}, 2);
    REQUIRE(empty.size() == 1);
    CHECK(empty.begin()->first.crossings.empty());

    const auto desc = P(g("O1+ U1+"), 2);
    CHECK(desc.size() == 1);
    CHECK(c2_sum(desc) == 0);

    for (const char* code : {kTrefoil, kFigureEight}) CHECK(c2_sum(P(g(code), 2)) == c2(planar_from_gauss(g(code))));

    const auto dbl = make_double(g(kTrefoil), 1);
    CHECK(c2_sum(P(dbl, 2)) == c2_sum(P(resolve_double(dbl, 1), 2)));
  }

  TEST_CASE("Q") {
    CHECK(Q(DiagramSum(GaussDiagram{}), 2) == DiagramSum(GaussDiagram{}));
    const auto q = Q(DiagramSum(g("O1+ O2- U1+ U2-")), 2);
    CHECK(is_descending_sum(q));
    std::mt19937_64 rng(9);
    OmegaEvaluator ev(c2_invariant(), 2);
    for (int i = 0; i < 10; ++i) {
      const auto d = random_diagram(rng, 1 + i % 3);
      const auto x = Q(DiagramSum(d), 2);
      CHECK(is_descending_sum(x));
      CHECK(ev.nu_bar(s_inv(x)) == ev.nu_bar(s_inv(d)));
    }
  }

  TEST_CASE("omega") {
    CHECK(omega(GaussDiagram{}, c2_invariant(), 2) == 0);
    CHECK(omega(g("O1+ U2+ U1+ O2+"), c2_invariant(), 2) == 1);
    CHECK(omega(g("O1+ O2+ U1+ U2+"), c2_invariant(), 2) == 0);
    CHECK(omega_table(zero_invariant(), 2).entries.empty());

    const auto table = omega_table(c2_invariant(), 2, 2);
    CHECK(table.at(GaussDiagram{}) == 0);
    CHECK(table.entries.size() == 4);
    CHECK(table.at(g("O1- U2- U1- O2-")) == 1);
    CHECK(table.at(g("O1+ U2- U1+ O2-")) == -1);
    CHECK(eval_formula(table, g(kTrefoil)) == 1);
    CHECK(eval_formula(table, g(kFigureEight)) == -1);
  }

  TEST_CASE("omega_table does not depend on the worker count") {
    CHECK(to_json(omega_table(c2_invariant(), 2, 1)) == to_json(omega_table(c2_invariant(), 2, 4)));
  }
}
