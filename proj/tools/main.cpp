#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "gpv/expansion.hpp"
#include "gpv/oracle.hpp"
#include "gpv/projection.hpp"
#include "gpv/tree.hpp"
#include "gpv/verify.hpp"
#include "gpv/words.hpp"

namespace {

struct Config {
  std::string in;
  std::string in_file;
  std::string out;
  std::string table;
  std::string pd;
  std::string invariant = "c2";
  std::string routing = "standard";
  std::string suite;
  std::string gens = "a,b";
  std::string word_invariant = "exp:a";
  int degree = 2;
  int strands = 3;
  unsigned threads = 0;
  gpv::VerifyOptions verify;
};

class Failure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string input_text(const Config& cfg) {
  if (!cfg.in_file.empty()) return slurp(cfg.in_file);
  return cfg.in;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

std::string dump_diagrams(const gpv::DiagramSum& x) {
  return gpv::dump(x, [](const gpv::GaussDiagram& d) { return d.key(); });
}

std::string dump_words(const gpv::WordSum& x) {
  return gpv::dump(x, [](const gpv::Word& w) { return gpv::to_text(w); });
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep))
    if (!part.empty()) out.push_back(part);
  return out;
}

// "exp:a", "exp:a*exp:b", "lk:1,2"; lk factors switch to the pure braid alphabet.
std::pair<gpv::WordInvariant, gpv::Alphabet> word_invariant(const Config& cfg) {
  const bool braid = cfg.word_invariant.find("lk:") != std::string::npos;
  const auto alphabet = braid ? gpv::Alphabet::pure_braid(cfg.strands) : gpv::Alphabet::from_names(split(cfg.gens, ','));
  std::optional<gpv::WordInvariant> nu;
  for (const auto& factor : split(cfg.word_invariant, '*')) {
    gpv::WordInvariant f;
    if (factor.starts_with("exp:")) {
      f = gpv::exp_sum_invariant(alphabet, factor.substr(4));
    } else if (factor.starts_with("lk:")) {
      const auto ij = split(factor.substr(3), ',');
      if (ij.size() != 2) throw std::invalid_argument("lk invariant needs two strand indices: " + factor);
      f = gpv::braid_linking_invariant(std::stoi(ij[0]), std::stoi(ij[1]), cfg.strands);
    } else {
      throw std::invalid_argument("unknown word invariant '" + factor + "' (exp:g, lk:i,j, products with *)");
    }
    nu = nu ? gpv::product_invariant(*nu, f) : f;
  }
  if (!nu) throw std::invalid_argument("empty word invariant");
  return {*nu, alphabet};
}

void run_verify(const Config& cfg) {
  const auto report = gpv::run_suite(cfg.suite, cfg.verify);
  std::cout << "seed " << cfg.verify.seed << '\n' << report.summary();
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out, std::ios::binary);
    f << report.to_json();
  }
  if (!report.pass()) throw Failure("verification failed: " + cfg.suite);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss diagram formulas for finite type invariants of long knots"};
  app.require_subcommand(1);
  Config cfg;

  auto add_in = [&](CLI::App* sub, const std::string& what) {
    auto* in = sub->add_option("--in", cfg.in, what);
    auto* file = sub->add_option("--in-file", cfg.in_file, "read the input from a file");
    in->excludes(file);
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "write output to this path"); };
  auto add_degree = [&](CLI::App* sub) {
    sub->add_option("--degree,-n", cfg.degree, "type of the invariant")->check(CLI::Range(1, 8));
  };

  auto* s = app.add_subcommand("s", "subdiagram expansion of a Gauss code");
  add_in(s, "Gauss code, e.g. \"O1+ U1+\"");
  add_out(s);
  auto* sinv = app.add_subcommand("sinv", "signed inverse expansion of a Gauss code");
  add_in(sinv, "Gauss code");
  add_out(sinv);
  auto* tree = app.add_subcommand("tree", "cut a Gauss diagram into its tree");
  add_in(tree, "Gauss code");
  add_out(tree);
  auto* project = app.add_subcommand("project", "P of a Gauss code as a sum of planar diagrams (JSON)");
  add_in(project, "Gauss code");
  add_out(project);
  add_degree(project);
  project->add_option("--routing", cfg.routing, "cap routing")->check(CLI::IsMember({"standard", "reverse"}));

  auto* omega = app.add_subcommand("omega", "formula table omega(B, nu, n) as JSON");
  add_degree(omega);
  omega->add_option("--invariant", cfg.invariant, "invariant name")->check(CLI::IsMember({"c2", "zero"}));
  omega->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  add_out(omega);

  auto* eval = app.add_subcommand("eval", "evaluate a formula table on a Gauss code");
  eval->add_option("--table", cfg.table, "FormulaTable JSON")->required();
  add_in(eval, "Gauss code");

  auto* oracle = app.add_subcommand("oracle", "evaluate an invariant on a realized diagram");
  oracle->add_option("--invariant", cfg.invariant, "c2 or alexander")->check(CLI::IsMember({"c2", "alexander"}));
  auto* pd_opt = oracle->add_option("--pd", cfg.pd, "PlanarDiagram JSON file");
  auto* code_opt = oracle->add_option("--in", cfg.in, "realizable Gauss code");
  pd_opt->excludes(code_opt);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite, "lemma1|lemma2|lemma3|main|words")
      ->required()
      ->check(CLI::IsMember({"lemma1", "lemma2", "lemma3", "main", "words"}));
  verify->add_option("--seed", cfg.verify.seed, "seed for randomized checks");
  verify->add_option("--max-chords", cfg.verify.max_chords, "chord bound for exhaustive checks")->check(CLI::Range(0, 4));
  verify->add_option("--random-chords", cfg.verify.random_chords, "chord bound for random samples");
  verify->add_option("--samples", cfg.verify.samples, "random sample count");
  add_degree(verify);
  add_out(verify);

  auto* word = app.add_subcommand("word", "words over an alphabet");
  word->require_subcommand(1);
  auto add_word_opts = [&](CLI::App* sub) {
    sub->add_option("--gens", cfg.gens, "comma separated generators");
    sub->add_option("--strands", cfg.strands, "strands for pure braid invariants")->check(CLI::Range(2, 8));
    sub->add_option("--invariant", cfg.word_invariant, "exp:g, lk:i,j or a product joined by *");
  };
  auto* wsinv = word->add_subcommand("sinv", "signed inverse expansion of a word");
  add_in(wsinv, "word, e.g. \"a b'\"");
  add_out(wsinv);
  add_word_opts(wsinv);
  auto* womega = word->add_subcommand("omega", "word formula table as JSON");
  add_word_opts(womega);
  add_degree(womega);
  add_out(womega);
  auto* weval = word->add_subcommand("eval", "evaluate a word formula table");
  weval->add_option("--table", cfg.table, "WordTable JSON")->required();
  add_in(weval, "word");
  auto* wverify = word->add_subcommand("verify", "run the word suite");
  wverify->add_option("--seed", cfg.verify.seed, "seed for randomized checks");
  wverify->add_option("--samples", cfg.verify.samples, "random sample count");
  add_out(wverify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*s) {
      emit(cfg, dump_diagrams(gpv::s(gpv::parse_gauss(input_text(cfg)))));
    } else if (*sinv) {
      emit(cfg, dump_diagrams(gpv::s_inv(gpv::parse_gauss(input_text(cfg)))));
    } else if (*tree) {
      emit(cfg, gpv::to_text(gpv::cut_tree(gpv::parse_gauss(input_text(cfg)))) + "\n");
    } else if (*project) {
      const auto d = gpv::parse_gauss(input_text(cfg));
      emit(cfg, gpv::to_json(gpv::P(d, cfg.degree, gpv::routing_from_name(cfg.routing))));
    } else if (*omega) {
      if (cfg.invariant == "c2" && cfg.degree != 2) throw std::invalid_argument("c2 has type 2; use --degree 2");
      emit(cfg, gpv::to_json(gpv::omega_table(gpv::invariant_by_name(cfg.invariant), cfg.degree, cfg.threads)));
    } else if (*eval) {
      const auto table = gpv::formula_table_from_json(slurp(cfg.table));
      std::cout << gpv::eval_formula(table, gpv::parse_gauss(input_text(cfg))) << '\n';
    } else if (*oracle) {
      const auto pd = cfg.pd.empty() ? gpv::planar_from_gauss(gpv::parse_gauss(cfg.in))
                                     : gpv::planar_from_json(slurp(cfg.pd));
      if (cfg.invariant == "alexander") std::cout << gpv::alexander(pd).to_string() << '\n';
      else std::cout << gpv::eval_singular(pd, gpv::c2_invariant()) << '\n';
    } else if (*verify) {
      run_verify(cfg);
    } else if (*wsinv) {
      const auto w = gpv::parse_word(input_text(cfg));
      emit(cfg, dump_words(gpv::s_inv_word(w)));
    } else if (*womega) {
      const auto [nu, alphabet] = word_invariant(cfg);
      emit(cfg, gpv::to_json(gpv::omega_word_table(nu, cfg.degree, alphabet)));
    } else if (*weval) {
      const auto table = gpv::word_table_from_json(slurp(cfg.table));
      std::cout << gpv::eval_word_formula(table, gpv::parse_word(input_text(cfg))) << '\n';
    } else if (*wverify) {
      cfg.suite = "words";
      run_verify(cfg);
    }
  } catch (const Failure& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
