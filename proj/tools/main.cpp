#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "arbzeta/verify.hpp"

namespace {

using namespace arbzeta;

std::string latex_letter(const Letter& l) {
  return (l.alphabet == Alphabet::X ? "x_{" : "y_{") + std::to_string(l.value) + "}";
}

// Nested bracket macros; definitions documented in the README.
std::string latex_tree(const PlanarTree& t) {
  if (t.children.empty()) return "\\leaf{" + latex_letter(t.decoration) + "}";
  std::string out = "\\node{" + latex_letter(t.decoration) + "}{";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ", ";
    out += latex_tree(t.children[i]);
  }
  return out + "}";
}

std::string latex_forest(const PlanarForest& f) {
  if (f.empty()) return "\\emptyforest";
  std::string out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) out += " \\, ";
    out += latex_tree(f.trees[i]);
  }
  return out;
}

Convention parse_convention(const std::string& name) {
  return name == "full" ? Convention::Full : Convention::Reduced;
}

int run_show(const std::string& format, const std::string& expr) {
  PlanarForest f = parse_forest(expr);
  std::cout << (format == "latex" ? latex_forest(f) : format_forest(f)) << "\n";
  return 0;
}

PlanarTree single_tree(const std::string& expr) {
  PlanarForest f = parse_forest(expr);
  if (f.trees.size() != 1) throw parse_error("expected a single tree", 0);
  return f.trees[0];
}

int run_apply(const std::string& map, const std::string& conv_name, const std::string& expr) {
  Convention conv = parse_convention(conv_name);
  if (map == "aY") {
    std::cout << format_word_sum(arborify_contracting(parse_forest(expr, Alphabet::Y))) << "\n";
  } else if (map == "aX") {
    std::cout << format_word_sum(arborify_simple(parse_forest(expr, Alphabet::X))) << "\n";
  } else if (map == "s") {
    std::cout << word_s(parse_word(expr), conv).str() << "\n";
  } else if (map == "sN") {
    std::cout << format_tree_sum(s_n(tree_sum(parse_forest(expr, Alphabet::Y)), conv)) << "\n";
  } else if (map == "sPN") {
    std::cout << format_forest(s_pn(parse_forest(expr, Alphabet::Y), conv)) << "\n";
  } else if (map == "error") {
    std::cout << format_tree_sum(error_term(single_tree(expr))) << "\n";
  } else if (map == "ptree") {
    std::cout << format_process_tree(process_tree(single_tree(expr))) << "\n";
  } else if (map == "phi") {
    std::cout << format_tree_sum(phi(tree_sum(parse_forest(expr, Alphabet::Y)))) << "\n";
  } else if (map == "sPT") {
    std::cout << format_tree_sum(s_pt(tree_sum(parse_forest(expr, Alphabet::Y)), conv)) << "\n";
  } else if (map == "beta") {
    std::cout << format_tree_sum(beta_section(single_tree(expr))) << "\n";
  } else {  // sT
    std::cout << format_tree_sum(s_t(tree_sum(parse_forest(expr, Alphabet::Y)), conv)) << "\n";
  }
  return 0;
}

int run_zeta(const std::string& kind, long cap, bool exact, const std::string& expr) {
  TruncatedValue v;
  if (kind == "word") {
    Word w = parse_word(expr);
    v = alphabet_of(w) == Alphabet::Y ? zeta_word_y(w, cap, exact) : zeta_word_x(w, cap, exact);
  } else if (kind == "first") {
    v = zeta_tree_first_kind(parse_forest(expr, Alphabet::Y), cap, exact);
  } else {
    v = zeta_tree_second_kind(parse_forest(expr, Alphabet::X), cap, exact);
  }
  std::cout << v.str() << "\n";
  return 0;
}

int run_clavier(long cap, const std::string& expr) {
  ClavierComparison c = clavier_compare(parse_forest(expr, Alphabet::Y), cap);
  std::cout << "lhs: " << c.lhs.str() << "\n";
  std::cout << "rhs: " << c.rhs.str() << "\n";
  std::cout << "tolerance: " << c.tolerance << "\n";
  const char* verdict = c.verdict == ClavierVerdict::StrictLess          ? "strict_less"
                        : c.verdict == ClavierVerdict::EqualWithinTolerance ? "equal_within_tolerance"
                                                                            : "violation";
  std::cout << "verdict: " << verdict << "\n";
  return 0;
}

int run_verify(const std::string& suite, int max_vertices, int max_index,
               const std::string& conv_name, const std::string& json_path) {
  CorpusSpec spec{max_vertices, max_index, Alphabet::Y};
  CorpusSpec spec_x{max_vertices, max_index, Alphabet::X};

  std::vector<Report> reports;
  const bool convention_sensitive = suite == "lemma42" || suite == "cancel" || suite == "diagram";
  std::vector<Convention> convs;
  if (convention_sensitive) {
    if (conv_name == "both") convs = {Convention::Reduced, Convention::Full};
    else
      convs = {parse_convention(conv_name)};
  }

  if (suite == "exchange") {
    reports.push_back(check_exchange(spec));
    reports.push_back(check_exchange(spec_x));
  } else if (suite == "oracles") {
    reports.push_back(check_oracles(spec));
    reports.push_back(check_oracles(spec_x));
  } else if (suite == "sections") {
    reports.push_back(check_sections(spec));
  } else if (suite == "orderings") {
    reports.push_back(check_orderings(spec));
  } else {
    for (Convention c : convs) {
      if (suite == "lemma42") reports.push_back(check_formula_42(spec, c));
      else if (suite == "cancel")
        reports.push_back(check_error_cancellation(spec, c));
      else
        reports.push_back(check_main_diagram(spec, c));
    }
  }

  for (const auto& r : reports) {
    std::cout << r.summary() << "\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(5, r.failures.size()); ++i)
      std::cout << "  fail: " << r.failures[i].input << "\n    lhs " << r.failures[i].lhs
                << "\n    rhs " << r.failures[i].rhs << "\n";
  }

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (reports.size() == 1) {
      out << reports[0].json() << "\n";
    } else {
      out << "[\n";
      for (std::size_t i = 0; i < reports.size(); ++i)
        out << reports[i].json() << (i + 1 < reports.size() ? ",\n" : "\n");
      out << "]\n";
    }
  }

  // With --convention both, a convention-sensitive suite succeeds when at
  // least one convention has no failures; otherwise every report must pass.
  if (convention_sensitive && conv_name == "both") {
    for (const auto& r : reports)
      if (r.ok()) return 0;
    return 1;
  }
  for (const auto& r : reports)
    if (!r.ok()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic toolkit for decorated rooted trees, arborified words, and truncated nested sums"};
  app.require_subcommand(1);

  std::string format = "text", map, conv = "reduced", verify_conv = "both", expr, kind, suite,
              json_path;
  long cap = 0;
  bool exact = false;
  int max_vertices = 6, max_index = 3;

  auto* show = app.add_subcommand("show", "Parse and pretty-print a forest");
  show->add_option("--format", format)->check(CLI::IsMember({"text", "latex"}));
  show->add_option("EXPR", expr)->required();

  auto* apply = app.add_subcommand("apply", "Apply a map to a forest or word");
  apply->add_option("--map", map)
      ->required()
      ->check(CLI::IsMember({"aY", "aX", "s", "sN", "sPN", "error", "ptree", "phi", "sPT", "beta", "sT"}));
  apply->add_option("--convention", conv)->check(CLI::IsMember({"full", "reduced"}));
  apply->add_option("EXPR", expr)->required();

  auto* zeta = app.add_subcommand("zeta", "Evaluate a truncated nested sum");
  zeta->add_option("--kind", kind)->required()->check(CLI::IsMember({"first", "second", "word"}));
  zeta->add_option("--truncate", cap)->required()->check(CLI::NonNegativeNumber);
  zeta->add_flag("--exact", exact);
  zeta->add_option("EXPR", expr)->required();

  auto* clavier = app.add_subcommand("clavier", "Compare the two truncated evaluations of a tree");
  clavier->add_option("--truncate", cap)->required()->check(CLI::PositiveNumber);
  clavier->add_option("TREE", expr)->required();

  auto* verify = app.add_subcommand("verify", "Run an exhaustive identity suite");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"exchange", "lemma42", "cancel", "diagram", "oracles", "sections", "orderings"}));
  verify->add_option("--max-vertices", max_vertices)->check(CLI::Range(1, 8));
  verify->add_option("--max-index", max_index)->check(CLI::Range(1, 6));
  verify->add_option("--convention", verify_conv)->check(CLI::IsMember({"full", "reduced", "both"}));
  verify->add_option("--json", json_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are exit 2; --help stays 0
  }

  try {
    if (show->parsed()) return run_show(format, expr);
    if (apply->parsed()) return run_apply(map, conv, expr);
    if (zeta->parsed()) return run_zeta(kind, cap, exact, expr);
    if (clavier->parsed()) return run_clavier(cap, expr);
    return run_verify(suite, max_vertices, max_index, verify_conv, json_path);
  } catch (const arbzeta::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
