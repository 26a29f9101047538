#include <algorithm>
#include <random>

#include "doctest.h"
#include "gpv/expansion.hpp"
#include "gpv/tree.hpp"

using namespace gpv;

namespace {
GaussDiagram g(const char* code) { return parse_gauss(code); }

bool is_permutation_of_arcs(const Tree& t, std::vector<int> order) {
  std::sort(order.begin(), order.end());
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] != static_cast<int>(i)) return false;
  return order.size() == t.arcs().size();
}
}  // namespace

TEST_SUITE("tree") {
  TEST_CASE("cut of the empty diagram") {
    const auto t = cut_tree(GaussDiagram{});
    CHECK(t.nodes().empty());
    CHECK(t.pair_count() == 0);
    CHECK(t.arcs().size() == 1);
    CHECK(glue_tree(t).empty());
    CHECK(arc_order(t) == std::vector<int>{0});
  }

  TEST_CASE("cut of a kink") {
    const auto t = cut_tree(g("O1+ U1+"));
    REQUIRE(t.nodes().size() == 1);
    CHECK(t.nodes()[0].role == Role::Over);
    CHECK(t.nodes()[0].sign == 1);
    CHECK(t.pair_count() == 1);
    CHECK(t.parent(0) == -1);
    CHECK(glue_tree(t) == g("O1+ U1+"));
  }

  TEST_CASE("glue inverts cut") {
    for (const char* code : {"O1+ U2+ O3+ U1+ O2+ U3+", "O1+ U2- O3- U1+ O4+ U3- O2- U4+", "DO1+ O2- DU1+ U2-",
                             "O1+ U2+ U1+ O2+", "DO1- DO2+ DU2+ DU1-"}) {
      const auto d = g(code);
      const auto t = cut_tree(d);
      CHECK(glue_tree(t) == d);
      CHECK(cut_tree(glue_tree(t)) == t);
    }
    for (const auto& d : enumerate(2)) CHECK(glue_tree(cut_tree(d)) == d);
  }

  TEST_CASE("key distinguishes decorations") {
    const auto a = cut_tree(g("O1+ U1+"));
    const auto b = a.with_decoration(0, Role::Under, -1);
    CHECK_FALSE(a == b);
    CHECK(glue_tree(b) == g("U1- O1-"));
    CHECK_THROWS(static_cast<void>(a.with_decoration(0, Role::Over, -1)));
    CHECK(a.with_decoration(0, Role::DOver, 1).key() != a.key());
  }

  TEST_CASE("arc order") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
      const auto t = cut_tree(random_diagram(rng, i % 6, 0));
      const auto order = arc_order(t);
      CHECK(is_permutation_of_arcs(t, order));
      CHECK(arc_order(cut_tree(glue_tree(t))) == order);
    }
  }

  TEST_CASE("star: rightmost arc first") {
    const auto t = cut_tree(g("O1+ U1+"));
    const auto order = arc_order(t);
    REQUIRE(order.size() == 4);
    const auto& node = t.nodes()[0];
    const auto rot = t.rotation(0);
    // In the counterclockwise rotation the slot after in1 is the first one visited.
    const auto in1 = std::find(rot.begin(), rot.end(), kIn1) - rot.begin();
    CHECK(order[0] == node.arcs[static_cast<std::size_t>(kIn1)]);
    CHECK(order[1] == node.arcs[static_cast<std::size_t>(rot[static_cast<std::size_t>((in1 + 1) % 4)])]);
  }

  TEST_CASE("is_descending") {
    CHECK(is_descending(GaussDiagram{}));
    CHECK(is_descending(g("O1+ O2- U1+ U2-")));
    CHECK_FALSE(is_descending(g("U1+ O1+")));
    CHECK_FALSE(is_descending(g("O1+ U2+ O3+ U1+ O2+ U3+")));
    CHECK(is_descending(g("DO1+ DO2+ DU1+ DU2+")));
    CHECK_FALSE(is_descending(g("DO1+ O2+ DO3+ DU1+ U2+ DU3+")));
  }

  TEST_CASE("descent is read from the first double point") {
    const auto d = g("O1+ DO2+ U1+ DU2+");
    CHECK(descent_base(d) == 1);
    CHECK(descent_base(g("O1+ U1+")) == 0);
    CHECK(met_first_as_under(d, 0, 1));
    CHECK_FALSE(is_descending(d));
    CHECK(is_descending(g("U1+ DO2+ O1+ DU2+")));
  }

  TEST_CASE("minimal double subtree") {
    CHECK(minimal_double_subtree(cut_tree(g("O1+ DO2+ U1+ DU2+"))).nodes == std::vector<int>{1});
    CHECK(minimal_double_subtree(cut_tree(g("DO1+ O2+ DO3+ DU1+ U2+ DU3+"))).nodes == std::vector<int>{0, 1, 2});
    CHECK(minimal_double_subtree(cut_tree(g("DO1+ DO2+ DU1+ DU2+"))).nodes == std::vector<int>{0, 1});
  }

  TEST_CASE("to_text") {
    CHECK(to_text(cut_tree(GaussDiagram{})) == "R[end]");
    CHECK(to_text(cut_tree(g("O1+ U1+"))).find("node(over,+)") != std::string::npos);
  }
}
