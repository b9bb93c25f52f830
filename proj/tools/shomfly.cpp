#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "shomfly/braid.hpp"
#include "shomfly/catalog.hpp"
#include "shomfly/coeffs.hpp"
#include "shomfly/hecke.hpp"
#include "shomfly/invariant.hpp"
#include "shomfly/singular.hpp"
#include "shomfly/traces.hpp"
#include "shomfly/verify.hpp"

using namespace shomfly;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNotExpressible = 3;

BraidWord resolve_word(const std::string& word_or_name, int strands) {
  if (auto entry = find_builtin(word_or_name)) return entry->word;
  return parse_braid(word_or_name, strands);
}

struct InvariantArgs {
  std::string word;
  std::string form = "canonical";
  bool basis = false;
  bool json = false;
  int strands = 0;
  int jobs = 1;
};

int cmd_invariant(const InvariantArgs& args) {
  BraidWord w = resolve_word(args.word, args.strands);
  InvariantPoly poly;
  std::string form = args.form;
  if (form == "raw") {
    poly = invariant_raw(w, args.jobs);
  } else if (form == "canonical" || form == "resolution") {
    Canonicalized c = to_canonical(resolution_invariant(w, args.jobs));
    if (!c.poly) {
      std::cerr << "not expressible in the (t, x) ring: " << c.residual << "\n";
      return kExitNotExpressible;
    }
    poly = *c.poly;
  } else {
    std::cerr << "unknown form '" << form << "' (expected canonical|raw|resolution)\n";
    return kExitUsage;
  }

  if (args.json) {
    nlohmann::json out;
    out["word"] = format_braid(w);
    out["n"] = w.strands;
    out["d"] = w.degree();
    out["form"] = form == "resolution" ? "canonical" : form;
    out["terms"] = nlohmann::json::array();
    for (int k = poly.degree(); k >= 0; --k) {
      RationalFn c = poly.coeff(k);
      if (c.is_zero()) continue;
      out["terms"].push_back({{"X", k}, {"Y", poly.degree() - k}, {"coeff", to_text(c)}});
    }
    if (args.basis) {
      out["basis"] = nlohmann::json::array();
      for (const RationalFn& c : basis_invariants(w)) out["basis"].push_back(to_text(c));
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  std::cout << to_text(poly) << "\n";
  if (args.basis) {
    auto vec = basis_invariants(w);
    for (size_t k = 0; k < vec.size(); ++k)
      std::cout << "I[" << k << "] = " << to_text(vec[k]) << "\n";
  }
  return 0;
}

int cmd_trace(const std::string& word, int strands, int expect_d) {
  BraidWord w = resolve_word(word, strands);
  if (expect_d >= 0 && w.degree() != expect_d) {
    std::cerr << "word has " << w.degree() << " singular letters, --d says " << expect_d << "\n";
    return kExitUsage;
  }
  for (int k = 0; k <= w.degree(); ++k)
    std::cout << "T[" << k << "] = " << to_text(basis_trace(k, w)) << "\n";
  return 0;
}

int cmd_normalform(const std::string& word, int strands) {
  BraidWord w = resolve_word(word, strands);
  if (w.degree() == 0)
    std::cout << to_text(from_word(w)) << "\n";
  else
    std::cout << to_text(rewrite_to_spanning(w)) << "\n";
  return 0;
}

int cmd_table(const std::string& path, bool as_json, int jobs) {
  std::vector<CatalogEntry> entries = load_catalog(path);
  nlohmann::json rows = nlohmann::json::array();
  for (const CatalogEntry& e : entries) {
    Canonicalized c = to_canonical(resolution_invariant(e.word, jobs));
    if (!c.poly) {
      std::cerr << "entry '" << e.name << "': not expressible: " << c.residual << "\n";
      return kExitNotExpressible;
    }
    std::string text = to_text(*c.poly);
    if (!e.expected_invariant.empty() && e.expected_invariant != text) {
      std::cerr << "entry '" << e.name << "': catalog expects '" << e.expected_invariant
                << "' but engine yields '" << text << "'\n";
      return 1;
    }
    if (as_json) {
      rows.push_back({{"name", e.name},
                      {"n", e.word.strands},
                      {"d", e.word.degree()},
                      {"components", e.components},
                      {"invariant", text}});
    } else {
      std::cout << e.name << '\t' << e.word.strands << '\t' << e.word.degree() << '\t'
                << e.components << '\t' << text << "\n";
    }
  }
  if (as_json) std::cout << rows.dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts) {
  SuiteReport rep = run_suite(suite, opts);
  int failures = 0;
  for (const CheckResult& c : rep.cases) {
    std::cout << c.name << ": " << status_name(c.status);
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
    if (!c.ok()) ++failures;
  }
  std::cout << rep.suite << ": " << (rep.cases.size() - failures) << "/" << rep.cases.size()
            << " ok\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal HOMFLY-type invariants of singular links, from closed braid words"};
  app.require_subcommand(1);

  std::string cache_file;
  bool no_cache = false;
  app.add_option("--cache-file", cache_file, "trace cache file (default: $SHOMFLY_CACHE_FILE)");
  app.add_flag("--no-cache", no_cache, "disable the trace cache file");

  InvariantArgs inv_args;
  auto* inv = app.add_subcommand("invariant", "print the invariant of a word or catalog name");
  inv->add_option("word", inv_args.word, "braid word or catalog name")->required();
  inv->add_option("--form", inv_args.form, "canonical|raw|resolution");
  inv->add_flag("--basis", inv_args.basis, "also print the basis-invariant vector");
  inv->add_flag("--json", inv_args.json, "JSON output");
  inv->add_option("--strands", inv_args.strands, "strand count override");
  inv->add_option("--jobs", inv_args.jobs, "worker threads for resolution sums");

  std::string trace_word;
  int trace_strands = 0, trace_d = -1;
  auto* tr = app.add_subcommand("trace", "print the basis Markov traces of a word");
  tr->add_option("word", trace_word)->required();
  tr->add_option("--strands", trace_strands);
  tr->add_option("--d", trace_d, "assert the singular degree");

  std::string nf_word;
  int nf_strands = 0;
  auto* nf = app.add_subcommand("normalform", "print the basis or spanning-set expansion");
  nf->add_option("word", nf_word)->required();
  nf->add_option("--strands", nf_strands);

  std::string table_path;
  bool table_json = false, table_tsv = false;
  int table_jobs = 1;
  auto* tb = app.add_subcommand("table", "evaluate a catalog file");
  tb->add_option("catalog", table_path)->required();
  tb->add_flag("--json", table_json);
  tb->add_flag("--tsv", table_tsv);
  tb->add_option("--jobs", table_jobs);

  std::string suite;
  SuiteOptions sopts;
  auto* vf = app.add_subcommand("verify", "run a verification suite");
  vf->add_option("suite", suite, "skein|desing|markov|lemmas|independence|traces|universality")
      ->required();
  vf->add_option("--d", sopts.d);
  vf->add_option("--n", sopts.n);
  vf->add_option("--seed", sopts.seed);
  vf->add_option("--trials", sopts.trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  if (!no_cache) {
    if (cache_file.empty()) {
      if (const char* env = std::getenv("SHOMFLY_CACHE_FILE")) cache_file = env;
    }
    if (!cache_file.empty()) install_cache_file(cache_file);
  }

  try {
    if (inv->parsed()) return cmd_invariant(inv_args);
    if (tr->parsed()) return cmd_trace(trace_word, trace_strands, trace_d);
    if (nf->parsed()) return cmd_normalform(nf_word, nf_strands);
    if (tb->parsed()) return cmd_table(table_path, table_json && !table_tsv, table_jobs);
    if (vf->parsed()) return cmd_verify(suite, sopts);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CatalogError& e) {
    std::cerr << "catalog error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
