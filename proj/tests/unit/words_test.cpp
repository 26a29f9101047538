#include <algorithm>
#include <random>

#include "doctest.h"
#include "gpv/words.hpp"

using namespace gpv;

namespace {
Word w(const char* text) { return parse_word(text); }

const Alphabet& ab() {
  static const Alphabet a = Alphabet::from_names({"a", "b"});
  return a;
}
}  // namespace

TEST_SUITE("words") {
  TEST_CASE("parse and print") {
    CHECK(to_text(w("a b' a")) == "a b' a");
    CHECK(w("").empty());
    CHECK(w("A1_2 A1_3'").size() == 2);
    CHECK_THROWS(w("1a"));
    CHECK_THROWS(ab().check(w("a c")));
  }

  TEST_CASE("subwords") {
    auto sub = subwords(w("a b"));
    std::sort(sub.begin(), sub.end());
    std::vector<Word> expected{w(""), w("a"), w("b"), w("a b")};
    std::sort(expected.begin(), expected.end());
    CHECK(sub == expected);
    CHECK(subwords(w("")).size() == 1);
    CHECK(subwords(w("a a b' a b")).size() == 32);
  }

  TEST_CASE("s_inv_word is the product of (g - 1)") {
    WordSum expected(w("a b"));
    expected.add(w("a"), -1);
    expected.add(w("b"), -1);
    expected.add(w(""), 1);
    CHECK(s_inv_word(w("a b")) == expected);
    CHECK(expand_product(w("a b")) == expected);
    CHECK(s_word(w("")) == WordSum(w("")));
    CHECK(s_inv_word(s_word(w("a b' a"))) == WordSum(w("a b' a")));
  }

  TEST_CASE("repeated letters merge in s") {
    const auto x = s_word(w("a a"));
    CHECK(x.coeff(w("a")) == 2);
    CHECK(x.coeff(w("a a")) == 1);
    CHECK(x.coeff(w("")) == 1);
  }

  TEST_CASE("free_reduce") {
    CHECK(free_reduce(w("a b b' a'")).empty());
    CHECK(free_reduce(w("a b' b a")) == w("a a"));
  }

  TEST_CASE("all_words and random_word") {
    CHECK(all_words(ab(), 2).size() == 16);
    CHECK(all_words(ab(), 0).size() == 1);
    std::mt19937_64 rng(1);
    const auto r = random_word(rng, ab(), 7);
    CHECK(r.size() == 7);
    CHECK_NOTHROW(ab().check(r));
  }

  TEST_CASE("exp_sum") {
    CHECK(exp_sum(w("a b a'"), "a") == 0);
    CHECK(exp_sum(w("a a b"), "a") == 2);
    const auto nu = exp_sum_invariant(ab(), "a");
    CHECK(nu(s_inv_word(w("a"))) == 1);
    CHECK(nu(s_inv_word(w("b"))) == 0);
    CHECK(nu(s_inv_word(w("a b"))) == 0);
    const auto table = omega_word_table(nu, 1, ab());
    CHECK(table.at(w("a")) == 1);
    CHECK(table.at(w("a'")) == -1);
    CHECK(table.at(w("b")) == 0);
  }

  TEST_CASE("product of exponent sums") {
    const auto nu = product_invariant(exp_sum_invariant(ab(), "a"), exp_sum_invariant(ab(), "b"));
    CHECK(nu.degree == 2);
    CHECK(nu(w("a b")) == 1);
    CHECK(nu(s_inv_word(w("a b"))) == 1);
    for (const auto& u : all_words(ab(), 3)) CHECK(nu(s_inv_word(u)) == 0);
  }

  TEST_CASE("word formula") {
    const auto nu = product_invariant(exp_sum_invariant(ab(), "a"), exp_sum_invariant(ab(), "b"));
    const auto table = omega_word_table(nu, 2, ab());
    std::mt19937_64 rng(2);
    for (int i = 0; i < 40; ++i) {
      const auto u = random_word(rng, ab(), i % 9);
      CHECK(eval_word_formula(table, u) == nu(u));
    }
    const auto back = word_table_from_json(to_json(table));
    CHECK(back.entries == table.entries);
    CHECK(back.degree == 2);
  }

  TEST_CASE("pure braid linking") {
    CHECK(pure_braid_generator(1, 2) == "A1_2");
    CHECK(Alphabet::pure_braid(3).gens.size() == 3);
    CHECK(braid_linking(w("A1_2"), 1, 2, 3) == 1);
    CHECK(braid_linking(w("A1_2 A1_3 A1_2'"), 1, 2, 3) == 0);
    CHECK_THROWS_AS(braid_linking(w("A1_2"), 2, 4, 3), std::out_of_range);
    const auto nu = braid_linking_invariant(1, 3, 3);
    const auto table = omega_word_table(nu, 1, Alphabet::pure_braid(3));
    CHECK(eval_word_formula(table, w("A1_3 A2_3 A1_3 A1_2'")) == 2);
  }
}
