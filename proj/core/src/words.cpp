#include "gpv/words.hpp"

#include <algorithm>
#include <cctype>
#include "json.hpp"
#include <sstream>
#include <stdexcept>

#include "gpv/gauss_diagram.hpp"

namespace gpv {

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    Letter l;
    if (tok.back() == '\'') {
      l.inverse = true;
      tok.pop_back();
    }
    if (tok.empty() || !std::isalpha(static_cast<unsigned char>(tok[0])))
      throw ParseError("bad letter: '" + tok + "'");
    for (char ch : tok)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw ParseError("bad letter: '" + tok + "'");
    l.gen = tok;
    w.push_back(std::move(l));
  }
  return w;
}

std::string to_text(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.gen;
    if (l.inverse) out += '\'';
  }
  return out;
}

bool Alphabet::contains(const std::string& g) const {
  return std::find(gens.begin(), gens.end(), g) != gens.end();
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  for (const auto& g : gens) {
    out.push_back({g, false});
    out.push_back({g, true});
  }
  return out;
}

void Alphabet::check(const Word& w) const {
  for (const auto& l : w)
    if (!contains(l.gen)) throw std::invalid_argument("unknown generator: " + l.gen);
}

Alphabet Alphabet::from_names(std::vector<std::string> names) { return Alphabet{std::move(names)}; }

std::string pure_braid_generator(int i, int j) {
  return "A" + std::to_string(i) + "_" + std::to_string(j);
}

Alphabet Alphabet::pure_braid(int strands) {
  Alphabet a;
  for (int i = 1; i <= strands; ++i)
    for (int j = i + 1; j <= strands; ++j) a.gens.push_back(pure_braid_generator(i, j));
  return a;
}

std::vector<Word> subwords(const Word& w) {
  if (w.size() >= 32) throw std::invalid_argument("word too long to expand");
  std::vector<Word> out;
  const std::uint32_t count = 1u << w.size();
  out.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    Word u;
    for (std::size_t i = 0; i < w.size(); ++i)
      if ((mask >> i) & 1u) u.push_back(w[i]);
    out.push_back(std::move(u));
  }
  return out;
}

WordSum s_word(const Word& w) {
  WordSum out;
  for (auto& u : subwords(w)) out.add(u, 1);
  return out;
}

WordSum s_inv_word(const Word& w) {
  WordSum out;
  for (auto& u : subwords(w)) out.add(u, (w.size() - u.size()) % 2 == 0 ? 1 : -1);
  return out;
}

WordSum s_word(const WordSum& x) {
  WordSum out;
  for (const auto& [w, c] : x) out.add(s_word(w), c);
  return out;
}

WordSum s_inv_word(const WordSum& x) {
  WordSum out;
  for (const auto& [w, c] : x) out.add(s_inv_word(w), c);
  return out;
}

WordSum expand_product(const Word& w) {
  WordSum acc(Word{});
  for (const auto& l : w) {
    WordSum next;
    for (const auto& [u, c] : acc) {
      Word longer = u;
      longer.push_back(l);
      next.add(longer, c);
      next.add(u, -c);
    }
    acc = std::move(next);
  }
  return acc;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().inverse != l.inverse) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

std::vector<Word> all_words(const Alphabet& a, int length) {
  if (length < 0) throw std::invalid_argument("negative word length");
  const auto letters = a.letters();
  std::vector<Word> out{Word{}};
  for (int k = 0; k < length; ++k) {
    std::vector<Word> next;
    next.reserve(out.size() * letters.size());
    for (const auto& w : out)
      for (const auto& l : letters) {
        next.push_back(w);
        next.back().push_back(l);
      }
    out = std::move(next);
  }
  return out;
}

Word random_word(std::mt19937_64& rng, const Alphabet& a, int length) {
  const auto letters = a.letters();
  if (letters.empty()) throw std::invalid_argument("empty alphabet");
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word w;
  for (int i = 0; i < length; ++i) w.push_back(letters[pick(rng)]);
  return w;
}

Coeff WordInvariant::operator()(const WordSum& x) const {
  Coeff total = 0;
  for (const auto& [w, c] : x) total += c * evaluate(w);
  return total;
}

Coeff exp_sum(const Word& w, const std::string& g) {
  Coeff n = 0;
  for (const auto& l : w)
    if (l.gen == g) n += l.inverse ? -1 : 1;
  return n;
}

WordInvariant exp_sum_invariant(const Alphabet& a, const std::string& g) {
  if (!a.contains(g)) throw std::invalid_argument("unknown generator: " + g);
  return {"exp_" + g, 1, [g](const Word& w) { return exp_sum(w, g); }};
}

WordInvariant product_invariant(const WordInvariant& a, const WordInvariant& b) {
  return {a.name + "*" + b.name, a.degree + b.degree,
          [fa = a.evaluate, fb = b.evaluate](const Word& w) { return fa(w) * fb(w); }};
}

Coeff braid_linking(const Word& w, int i, int j, int strands) {
  if (i < 1 || j <= i || j > strands)
    throw std::out_of_range("braid_linking: pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range for " + std::to_string(strands) + " strands");
  return exp_sum(w, pure_braid_generator(i, j));
}

WordInvariant braid_linking_invariant(int i, int j, int strands) {
  braid_linking({}, i, j, strands);
  return {"lk_" + std::to_string(i) + "_" + std::to_string(j), 1,
          [=](const Word& w) { return braid_linking(w, i, j, strands); }};
}

Coeff WordTable::at(const Word& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

WordTable omega_word_table(const WordInvariant& nu, int n, const Alphabet& a) {
  WordTable t;
  t.degree = n;
  t.invariant = nu.name;
  for (int len = 0; len <= n; ++len)
    for (const auto& u : all_words(a, len))
      if (const Coeff c = nu(s_inv_word(u)); c != 0) t.entries[u] = c;
  return t;
}

Coeff eval_word_formula(const WordTable& table, const Word& w) {
  Coeff total = 0;
  for (const auto& u : subwords(w))
    if (static_cast<int>(u.size()) <= table.degree) total += table.at(u);
  return total;
}

std::string to_json(const WordTable& table) {
  std::vector<std::pair<std::string, Coeff>> rows;
  for (const auto& [w, c] : table.entries) rows.emplace_back(to_text(w), c);
  std::sort(rows.begin(), rows.end());
  nlohmann::ordered_json j;
  j["degree"] = table.degree;
  j["invariant"] = table.invariant;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [word, c] : rows) j["entries"].push_back({{"word", word}, {"coeff", c}});
  return j.dump(2) + "\n";
}

WordTable word_table_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  WordTable t;
  t.degree = j.at("degree").get<int>();
  t.invariant = j.at("invariant").get<std::string>();
  for (const auto& e : j.at("entries")) {
    const auto c = e.at("coeff").get<Coeff>();
    if (c != 0) t.entries[parse_word(e.at("word").get<std::string>())] = c;
  }
  return t;
}

}  // namespace gpv
