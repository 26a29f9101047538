#pragma once

#include <compare>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gpv/formal_sum.hpp"

namespace gpv {

struct Letter {
  std::string gen;
  bool inverse = false;
  auto operator<=>(const Letter&) const = default;
};

/// Unreduced word: g g' is kept as two letters.
using Word = std::vector<Letter>;
using WordSum = FormalSum<Word>;

/// Letters separated by whitespace, inverse marked by a trailing apostrophe:
/// "a b a'", "A1_2 A1_3'". Throws ParseError.
Word parse_word(std::string_view text);
std::string to_text(const Word& w);

struct Alphabet {
  std::vector<std::string> gens;

  [[nodiscard]] bool contains(const std::string& g) const;
  /// g1, g1', g2, g2', ...
  [[nodiscard]] std::vector<Letter> letters() const;
  /// Throws std::invalid_argument naming the first letter not drawn from the alphabet.
  void check(const Word& w) const;

  static Alphabet from_names(std::vector<std::string> names);
  /// A{i}_{j} for 1 <= i < j <= strands.
  static Alphabet pure_braid(int strands);
};

std::string pure_braid_generator(int i, int j);

/// All 2^m subsequences; bit i of the index selects letter i.
std::vector<Word> subwords(const Word& w);

WordSum s_word(const WordSum& x);
WordSum s_word(const Word& w);
WordSum s_inv_word(const WordSum& x);
WordSum s_inv_word(const Word& w);

/// (g1 - 1)(g2 - 1)...(gm - 1) multiplied out one factor at a time.
WordSum expand_product(const Word& w);

/// Cancels adjacent g g' and g' g pairs.
Word free_reduce(const Word& w);

/// Every word of exactly `length` letters over the alphabet and its inverses.
std::vector<Word> all_words(const Alphabet& a, int length);
Word random_word(std::mt19937_64& rng, const Alphabet& a, int length);

struct WordInvariant {
  std::string name;
  int degree = 0;
  std::function<Coeff(const Word&)> evaluate;

  Coeff operator()(const Word& w) const { return evaluate(w); }
  Coeff operator()(const WordSum& x) const;
};

/// Occurrences of g minus occurrences of g'.
Coeff exp_sum(const Word& w, const std::string& g);

/// exp_sum against a generator of the alphabet, type 1. Throws
/// std::invalid_argument for an unknown generator.
WordInvariant exp_sum_invariant(const Alphabet& a, const std::string& g);

/// Pointwise product; degrees add.
WordInvariant product_invariant(const WordInvariant& a, const WordInvariant& b);

/// Exponent sum of A{i}_{j}; throws std::out_of_range unless 1 <= i < j <= strands.
Coeff braid_linking(const Word& w, int i, int j, int strands);
WordInvariant braid_linking_invariant(int i, int j, int strands);

struct WordTable {
  int degree = 0;
  std::string invariant;
  std::map<Word, Coeff> entries;  // zero entries never stored

  [[nodiscard]] Coeff at(const Word& w) const;
};

/// table[u] = nu(s_inv_word(u)) for every word u with |u| <= n.
WordTable omega_word_table(const WordInvariant& nu, int n, const Alphabet& a);

/// Sum of table entries over the subwords of w of length <= degree.
Coeff eval_word_formula(const WordTable& table, const Word& w);

std::string to_json(const WordTable& table);
WordTable word_table_from_json(const std::string& text);

}  // namespace gpv
