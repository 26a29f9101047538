#include "gpv/verify.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gpv/braid.hpp"
#include "gpv/projection.hpp"
#include "gpv/words.hpp"
#include "json.hpp"

namespace gpv {

namespace {

Check make(std::string name, std::string anchor, bool pass, std::string detail) {
  return {std::move(name), std::move(anchor), pass, std::move(detail)};
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Coeff c2_of(const FormalSum<PlanarDiagram>& x) { return eval_singular(x, c2_invariant()); }
Coeff c2_of(const PlanarDiagram& pd) { return eval_singular(pd, c2_invariant()); }

// First failure wins; later ones only bump the count.
struct Failures {
  int count = 0;
  std::string first;
  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  [[nodiscard]] std::string detail(int total, const std::string& unit) const {
    std::ostringstream os;
    os << total << ' ' << unit;
    if (count) os << ", " << count << " failed; first: " << first;
    return os.str();
  }
};

}  // namespace

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"anchor", c.anchor}, {"pass", c.pass}, {"detail", c.detail}});
  return j.dump(2) + "\n";
}

std::string Report::summary() const {
  std::ostringstream os;
  int passed = 0;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    passed += c.pass;
  }
  os << suite << ": " << passed << '/' << checks.size() << " checks passed\n";
  return os.str();
}

std::vector<GaussDiagram> random_braid_knots(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<GaussDiagram> out;
  for (int i = 0; i < count; ++i) {
    const int strands = 3 + i % 3;
    const auto word = random_knot_braid(rng, strands, uniform(rng, 5, 12));
    out.push_back(*braid_closure_long_knot(word, strands));
  }
  return out;
}

// ---------------------------------------------------------------- expansion

Check check_inverse_exhaustive(int kmax) {
  Failures f;
  const auto all = enumerate(kmax);
  for (const auto& d : all) {
    const DiagramSum x(d);
    if (s_inv(s(x)) != x || s(s_inv(x)) != x) f.add(d.key());
  }
  return make("inverse-exhaustive", "s_inv . s = id = s . s_inv on every diagram with <= " + std::to_string(kmax) + " chords",
              f.count == 0, f.detail(static_cast<int>(all.size()), "diagrams"));
}

Check check_inverse_random(std::uint64_t seed, int count, int max_chords) {
  std::mt19937_64 rng(seed);
  Failures f;
  for (int i = 0; i < count; ++i) {
    const auto d = random_diagram(rng, uniform(rng, 0, max_chords));
    const DiagramSum x(d);
    if (s_inv(s(x)) != x || s(s_inv(x)) != x) f.add(d.key());
  }
  return make("inverse-random", "s_inv . s = id = s . s_inv on random diagrams", f.count == 0,
              f.detail(count, "diagrams, seed " + std::to_string(seed)));
}

Check check_double_preservation(std::uint64_t seed, int count, int max_chords) {
  std::mt19937_64 rng(seed);
  Failures f;
  for (int i = 0; i < count; ++i) {
    const int chords = uniform(rng, 1, max_chords);
    const auto d = random_diagram(rng, chords, uniform(rng, 1, chords));
    const auto doubles = subdiagram_mask(d, 0);
    for (const auto& x : {s(d), s_inv(d)})
      for (const auto& [term, c] : x)
        if (subdiagram_mask(term, 0) != doubles) f.add(d.key() + " -> " + term.key());
  }
  return make("double-preservation", "every term of s(D) and s_inv(D) keeps all double chords of D",
              f.count == 0, f.detail(count, "mixed diagrams"));
}

Check check_enumeration_counts(int kmax) {
  const auto all = enumerate(kmax);
  std::vector<std::uint64_t> seen(static_cast<std::size_t>(kmax + 1), 0);
  bool sorted_unique = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    ++seen[all[i].chord_count()];
    if (i > 0 && !(all[i - 1].key() < all[i].key())) sorted_unique = false;
  }
  bool counts = true;
  std::ostringstream os;
  for (int k = 0; k <= kmax; ++k) {
    os << (k ? " " : "") << seen[static_cast<std::size_t>(k)];
    counts = counts && seen[static_cast<std::size_t>(k)] == diagram_count(k);
  }
  return make("enumeration", "(2k-1)!! 4^k diagrams with k chords, sorted and distinct", counts && sorted_unique,
              "counts " + os.str());
}

// ---------------------------------------------------------------- tree

namespace {

void roundtrip(const GaussDiagram& d, Failures& f) {
  const auto t = cut_tree(d);
  if (glue_tree(t) != d) f.add("k(c(D)) != D for " + d.key());
  else if (cut_tree(glue_tree(t)) != t) f.add("c(k(T)) != T for " + d.key());
  const auto order = arc_order(t);
  std::vector<bool> hit(t.arcs().size(), false);
  for (int a : order) hit[static_cast<std::size_t>(a)] = true;
  if (order.size() != t.arcs().size() || std::find(hit.begin(), hit.end(), false) != hit.end())
    f.add("arc order not a permutation for " + d.key());
}

}  // namespace

Check check_tree_roundtrip_exhaustive(int kmax) {
  Failures f;
  const auto all = enumerate(kmax);
  for (const auto& d : all) roundtrip(d, f);
  return make("tree-roundtrip-exhaustive", "gluing the cut tree gives the diagram back", f.count == 0,
              f.detail(static_cast<int>(all.size()), "diagrams"));
}

Check check_tree_roundtrip_random(std::uint64_t seed, int count, int max_chords) {
  std::mt19937_64 rng(seed);
  Failures f;
  for (int i = 0; i < count; ++i) {
    const int chords = uniform(rng, 0, max_chords);
    roundtrip(random_diagram(rng, chords, uniform(rng, 0, chords)), f);
  }
  return make("tree-roundtrip-random", "gluing the cut tree gives the diagram back", f.count == 0,
              f.detail(count, "mixed diagrams"));
}

Check check_descending_stable_under_s(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  Failures f;
  int seen = 0;
  while (seen < count) {
    const int chords = uniform(rng, 1, 5);
    const auto d = random_diagram(rng, chords, uniform(rng, 0, std::min(2, chords)));
    for (const auto& [t, c] : normalize(cut_tree(d), 2).terms) {
      if (seen++ >= count) break;
      const auto g = glue_tree(t);
      if (!is_descending_sum(s(g))) f.add(g.key());
    }
  }
  return make("descending-under-s", "s of a descending diagram is descending", f.count == 0,
              f.detail(count, "descending diagrams"));
}

// ---------------------------------------------------------------- projection

Check check_vassiliev_relation(std::uint64_t seed, int count, int max_chords) {
  std::mt19937_64 rng(seed);
  OmegaEvaluator ev(c2_invariant(), 2);
  Failures f;
  for (int i = 0; i < count; ++i) {
    const auto d = random_diagram(rng, uniform(rng, 1, max_chords), 1);
    const auto whole = ev.nu_bar(d);
    const auto split = ev.nu_bar(resolve_double(d, 0));
    if (whole != split) f.add(d.key() + ": " + std::to_string(whole) + " vs " + std::to_string(split));
  }
  return make("projection-vassiliev", "c2 P(double) = c2 P(positive) - c2 P(switched)", f.count == 0,
              f.detail(count, "single-double diagrams"));
}

Check check_projection_faithful(std::uint64_t seed, int braid_knots) {
  std::vector<GaussDiagram> knots{parse_gauss(kTrefoil), parse_gauss(kFigureEight)};
  for (auto& k : random_braid_knots(seed, braid_knots)) knots.push_back(std::move(k));
  Failures f;
  for (const auto& d : knots) {
    const auto projected = c2_of(P(DiagramSum(gauss_from_planar(planar_from_gauss(d))), 2));
    const auto direct = c2(planar_from_gauss(d));
    if (projected != direct) f.add(d.key());
  }
  return make("projection-faithful", "c2 P(iota D) = c2 D on classical long knots", f.count == 0,
              f.detail(static_cast<int>(knots.size()), "knots"));
}

namespace {

std::vector<Tree> random_descending_trees(std::mt19937_64& rng, int count, int max_chords) {
  std::vector<Tree> out;
  while (static_cast<int>(out.size()) < count) {
    const auto d = random_diagram(rng, uniform(rng, 2, max_chords), uniform(rng, 0, 1));
    for (const auto& [t, c] : normalize(cut_tree(d), 2).terms) {
      if (static_cast<int>(out.size()) == count) break;
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace

Check check_routing_independence(std::uint64_t seed, int count, int max_chords) {
  std::mt19937_64 rng(seed);
  Failures f;
  for (const auto& t : random_descending_trees(rng, count, max_chords)) {
    const auto a = c2_of(cap(t, Routing::Standard));
    const auto b = c2_of(cap(t, Routing::Reverse));
    if (a != b) f.add(t.key());
  }
  return make("routing-independence", "standard and reverse cap routing give equal c2", f.count == 0,
              f.detail(count, "descending trees"));
}

Check check_step2_invariance(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  Failures f;
  int seen = 0;
  while (seen < count) {
    const auto d = random_diagram(rng, uniform(rng, 3, 6), 2);
    for (const auto& [t, c] : step1_descend(cut_tree(d))) {
      if (seen == count || !step2_applicable(t)) continue;
      ++seen;
      const auto moved = step2_clump(t);
      if (c2_of(cap(t)) != c2_of(cap(moved))) f.add(t.key());
    }
  }
  return make("step2-invariance", "clumping double points leaves c2 of the capped tree unchanged", f.count == 0,
              f.detail(count, "applicable trees"));
}

Check check_normalize_termination(std::uint64_t seed, int count, int max_chords, int n) {
  std::mt19937_64 rng(seed);
  Failures f;
  for (int i = 0; i < count; ++i) {
    const auto d = random_diagram(rng, uniform(rng, 0, max_chords));
    try {
      for (const auto& [t, c] : normalize(cut_tree(d), n).terms)
        if (!is_descending(t)) f.add("non-descending output for " + d.key());
    } catch (const std::exception& e) {
      f.add(d.key() + ": " + e.what());
    }
  }
  return make("normalize-n" + std::to_string(n), "normalize terminates within its bound with descending output",
              f.count == 0, f.detail(count, "diagrams"));
}

Check check_descending_omega(int kmax) {
  OmegaEvaluator ev(c2_invariant(), 2);
  Failures f;
  int tested = 0;
  for (const auto& d : enumerate_mixed(kmax)) {
    if (d.real_count() == 0 || !is_descending(d)) continue;
    ++tested;
    if (const auto w = ev.omega(d); w != 0) f.add(d.key() + " -> " + std::to_string(w));
  }
  return make("descending-omega", "omega vanishes on descending diagrams with a real crossing", f.count == 0,
              f.detail(tested, "descending diagrams"));
}

Check check_vanishing(int chords) {
  OmegaEvaluator ev(c2_invariant(), 2);
  Failures f;
  int tested = 0;
  for (const auto& d : enumerate(chords)) {
    if (static_cast<int>(d.chord_count()) != chords) continue;
    ++tested;
    if (const auto w = ev.omega(d); w != 0) f.add(d.key() + " -> " + std::to_string(w));
  }
  return make("vanishing", "omega(B, c2, 2) = 0 for every B with " + std::to_string(chords) + " chords",
              f.count == 0, f.detail(tested, "diagrams"));
}

Check check_main_identity(const FormulaTable& table, std::uint64_t seed, int braid_knots) {
  struct Case {
    GaussDiagram d;
    std::optional<Coeff> expected;
  };
  std::vector<Case> cases{{parse_gauss(kTrefoil), 1}, {parse_gauss(kFigureEight), -1}, {GaussDiagram{}, 0},
                          {parse_gauss("O1+ U1+"), 0}};
  for (auto& k : random_braid_knots(seed, braid_knots)) cases.push_back({std::move(k), std::nullopt});
  Failures f;
  for (const auto& [d, expected] : cases) {
    const auto oracle = c2(planar_from_gauss(d));
    const auto formula = eval_formula(table, d);
    if (formula != oracle || (expected && oracle != *expected))
      f.add(d.key() + ": formula " + std::to_string(formula) + ", oracle " + std::to_string(oracle));
  }
  return make("main-identity", "sum of omega over subdiagrams equals c2", f.count == 0,
              f.detail(static_cast<int>(cases.size()), "knots"));
}

Check check_q_descending(std::uint64_t seed, int count, int max_chords) {
  std::mt19937_64 rng(seed);
  OmegaEvaluator ev(c2_invariant(), 2);
  Failures f;
  for (int i = 0; i < count; ++i) {
    const auto d = random_diagram(rng, uniform(rng, 1, max_chords));
    const auto q = Q(DiagramSum(d), 2);
    if (!is_descending_sum(q)) f.add("Q not descending for " + d.key());
    else if (ev.nu_bar(s_inv(q)) != ev.nu_bar(s_inv(d))) f.add("nu-bar s_inv Q differs for " + d.key());
  }
  return make("q-descending", "Q(D) is descending and nu-bar s_inv Q = nu-bar s_inv", f.count == 0,
              f.detail(count, "diagrams"));
}

// ---------------------------------------------------------------- oracle

Check check_oracle_sanity(std::uint64_t seed, int count) {
  Failures f;
  std::vector<GaussDiagram> knots{GaussDiagram{}, parse_gauss(kTrefoil), parse_gauss(kFigureEight)};
  for (auto& k : random_braid_knots(seed, count)) knots.push_back(std::move(k));
  for (const auto& d : knots) {
    const auto a = alexander(planar_from_gauss(d));
    if (!a.is_symmetric() || a.eval_at_one() != 1) f.add("Alexander normalization on " + d.key());
  }
  const Coeff expected[] = {0, 1, -1};
  for (int i = 0; i < 3; ++i)
    if (c2(planar_from_gauss(knots[static_cast<std::size_t>(i)])) != expected[i])
      f.add("c2 of " + knots[static_cast<std::size_t>(i)].key());
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  int triple = 0;
  for (const auto& d : random_braid_knots(seed + 1, count)) {
    auto x = d;
    std::vector<std::uint32_t> ids(d.chord_count());
    std::iota(ids.begin(), ids.end(), 0u);
    std::shuffle(ids.begin(), ids.end(), rng);
    for (int k = 0; k < 3 && k < static_cast<int>(ids.size()); ++k) x = make_double(x, ids[static_cast<std::size_t>(k)]);
    ++triple;
    if (c2_of(planar_from_gauss(x)) != 0) f.add("three double points on " + x.key());
  }
  return make("oracle-sanity", "Alexander symmetric with value 1 at t=1; c2 on reference knots; type 2",
              f.count == 0, f.detail(static_cast<int>(knots.size()) + triple, "diagrams"));
}

// ---------------------------------------------------------------- words

namespace {

const Alphabet& ab() {
  static const Alphabet a = Alphabet::from_names({"a", "b"});
  return a;
}

std::vector<WordInvariant> word_invariants() {
  const auto exp_a = exp_sum_invariant(ab(), "a");
  const auto exp_b = exp_sum_invariant(ab(), "b");
  return {exp_a, product_invariant(exp_a, exp_b)};
}

}  // namespace

Check check_word_inverse(std::uint64_t seed, int count, int max_length) {
  std::mt19937_64 rng(seed);
  Failures f;
  for (int i = 0; i < count; ++i) {
    const auto w = random_word(rng, ab(), uniform(rng, 0, max_length));
    const WordSum x(w);
    if (s_inv_word(s_word(x)) != x || s_word(s_inv_word(x)) != x) f.add(to_text(w));
  }
  return make("word-inverse", "s_inv . s = id = s . s_inv on words", f.count == 0, f.detail(count, "words"));
}

Check check_word_expansion(std::uint64_t seed, int count, int max_length) {
  std::mt19937_64 rng(seed);
  Failures f;
  for (int i = 0; i < count; ++i) {
    const auto w = random_word(rng, ab(), uniform(rng, 0, max_length));
    if (s_inv_word(w) != expand_product(w)) f.add(to_text(w));
  }
  return make("word-expansion", "s_inv(g1...gm) = (g1-1)...(gm-1)", f.count == 0, f.detail(count, "words"));
}

Check check_word_vanishing() {
  Failures f;
  int tested = 0;
  for (const auto& nu : word_invariants())
    for (const auto& u : all_words(ab(), nu.degree + 1)) {
      ++tested;
      if (nu(s_inv_word(u)) != 0) f.add(nu.name + " on " + to_text(u));
    }
  return make("word-vanishing", "a type n invariant kills s_inv of every word of length n+1", f.count == 0,
              f.detail(tested, "words"));
}

Check check_word_formula(std::uint64_t seed, int count, int max_length) {
  std::mt19937_64 rng(seed);
  Failures f;
  int tested = 0;
  for (const auto& nu : word_invariants()) {
    const auto table = omega_word_table(nu, nu.degree, ab());
    for (int i = 0; i < count; ++i) {
      const auto w = random_word(rng, ab(), uniform(rng, 0, max_length));
      ++tested;
      if (eval_word_formula(table, w) != nu(w)) f.add(nu.name + " on " + to_text(w));
    }
  }
  return make("word-formula", "the subword formula reproduces the invariant", f.count == 0,
              f.detail(tested, "words"));
}

Check check_braid_linking_formula(std::uint64_t seed, int count, int max_length) {
  std::mt19937_64 rng(seed);
  const auto pb3 = Alphabet::pure_braid(3);
  Failures f;
  int tested = 0;
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    const auto nu = braid_linking_invariant(i, j, 3);
    const auto table = omega_word_table(nu, 1, pb3);
    for (int k = 0; k < count; ++k) {
      const auto w = random_word(rng, pb3, uniform(rng, 0, max_length));
      ++tested;
      if (eval_word_formula(table, w) != nu(w) || nu(w) != nu(free_reduce(w))) f.add(nu.name + " on " + to_text(w));
    }
  }
  return make("braid-linking-formula", "degree 1 subword formula reproduces pure braid linking numbers",
              f.count == 0, f.detail(tested, "words"));
}

// ---------------------------------------------------------------- suites

Report run_suite(const std::string& name, const VerifyOptions& opt) {
  Report r{name, {}};
  auto& c = r.checks;
  const auto seed = opt.seed;
  if (name == "lemma1") {
    c.push_back(check_enumeration_counts(opt.max_chords));
    c.push_back(check_inverse_exhaustive(opt.max_chords));
    c.push_back(check_inverse_random(seed, opt.samples, opt.random_chords));
    c.push_back(check_double_preservation(seed, opt.samples, opt.random_chords));
  } else if (name == "lemma2") {
    c.push_back(check_tree_roundtrip_exhaustive(opt.max_chords));
    c.push_back(check_tree_roundtrip_random(seed, opt.samples, opt.random_chords));
    c.push_back(check_vassiliev_relation(seed, 50, opt.random_chords));
    c.push_back(check_projection_faithful(seed, 10));
    c.push_back(check_routing_independence(seed, 50, 5));
    c.push_back(check_step2_invariance(seed, 50));
    c.push_back(check_normalize_termination(seed, 500, 5, 2));
    c.push_back(check_normalize_termination(seed, 500, 5, 3));
  } else if (name == "lemma3") {
    c.push_back(check_descending_omega(opt.max_chords));
    c.push_back(check_descending_stable_under_s(seed, 100));
  } else if (name == "main") {
    c.push_back(check_oracle_sanity(seed, 50));
    c.push_back(check_vanishing(opt.degree + 1));
    c.push_back(check_main_identity(omega_table(c2_invariant(), opt.degree), seed, 10));
    c.push_back(check_q_descending(seed, 50, 4));
  } else if (name == "words") {
    c.push_back(check_word_inverse(seed, opt.samples, 10));
    c.push_back(check_word_expansion(seed, opt.samples, 10));
    c.push_back(check_word_vanishing());
    c.push_back(check_word_formula(seed, 100, 8));
    c.push_back(check_braid_linking_formula(seed, 100, 8));
  } else {
    throw std::invalid_argument("unknown suite: " + name + " (lemma1|lemma2|lemma3|main|words)");
  }
  return r;
}

}  // namespace gpv
