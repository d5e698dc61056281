#include "weylpbc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>

#include "weylpbc/decision.hpp"
#include "weylpbc/errors.hpp"
#include "weylpbc/io.hpp"
#include "weylpbc/selftest.hpp"

namespace wpbc {

namespace {

RootDatum read_datum(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_input(text);
}

void write_verdict(std::ostream& out, const Verdict& v) {
  out << "cardinality: " << v.cardinality << "\n";
  out << "rank-sym: " << v.rank_sym << "\n";
  out << "independent: " << (v.independent ? "true" : "false") << "\n";
  out << "verdict: " << (v.iso ? "isomorphism" : "not-isomorphism") << "\n";
}

std::string tab_line(const RootDatum& d) {
  std::string s;
  for (std::size_t i = 0; i < d.tab.size(); ++i) {
    if (i) s += ',';
    s += d.tab[i].to_string();
  }
  return s;
}

int cmd_check(const std::string& file, std::ostream& out) {
  const RootDatum d = read_datum(file);
  const Verdict v = decide(d);
  write_verdict(out, v);
  return v.iso ? 0 : 1;
}

int cmd_witness(const std::string& file, bool word_search, std::uint64_t budget,
                std::ostream& out) {
  const RootDatum d = read_datum(file);
  const Verdict v = decide(d);
  write_verdict(out, v);
  if (v.independent) return 0;

  const Witness w = extract_witness(d);
  out << "dependency:\n";
  for (const F2Vector& cls : w.dependency) out << cls.to_string() << "\n";
  out << "pad-zero: " << (w.pad_zero ? "true" : "false") << "\n";
  if (word_search) {
    const auto word = find_identity_word(d, w, budget);
    if (word)
      out << "word: " << format_word(*word) << "\n";
    else
      out << "word: not-found-within-budget\n";
  }
  return 1;
}

int cmd_eval(const std::string& file, const std::string& word_text,
             std::ostream& out) {
  const RootDatum d = read_datum(file);
  const std::vector<GVector> word = parse_word(word_text, d.rank);
  out << "result: " << format_weyl(eval_word(d, word)) << "\n";
  return 0;
}

int cmd_enumerate(std::size_t rank, bool up_to_gl, std::ostream& out) {
  const auto data = enumerate_data(rank, EnumerateOptions{up_to_gl, false});
  for (const auto& [d, v] : data) {
    out << "tab: " << tab_line(d) << "\n";
    write_verdict(out, v);
    out << "\n";
  }
  out << "count: " << data.size() << "\n";
  return 0;
}

int cmd_selftest(std::uint64_t seed, std::uint64_t iters, std::ostream& out) {
  out << "seed: " << seed << "\n";
  out << "iters: " << iters << "\n";
  bool all_ok = true;
  for (const SuiteResult& r : run_property_suites(seed, iters)) {
    if (r.passed()) {
      out << "ok: " << r.name << " (" << r.checks << " checks)\n";
    } else {
      all_ok = false;
      out << "FAIL: " << r.name << " (" << r.checks
          << " checks): " << r.failures.front() << "\n";
    }
  }
  out << "result: " << (all_ok ? "pass" : "fail") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Presentation-by-conjugation checker for Weyl groups of "
               "A1-type root systems extended by a free abelian group"};
  app.name("weylpbc");
  app.require_subcommand(1);

  std::string check_file;
  auto* check = app.add_subcommand(
      "check", "Decide whether the initial group maps isomorphically onto the Weyl group");
  check->add_option("file", check_file, "root datum file")->required();

  std::string witness_file;
  bool word_search = false;
  std::uint64_t budget = 1000000;
  auto* witness =
      app.add_subcommand("witness", "Extract a dependency witness when not an isomorphism");
  witness->add_option("file", witness_file, "root datum file")->required();
  witness->add_flag("--word-search", word_search,
                    "also search for an explicit identity word realizing the witness");
  witness->add_option("--budget", budget, "step limit for the word search");

  std::string eval_file;
  std::string word_text;
  auto* eval = app.add_subcommand("eval", "Evaluate a reflection word in the Weyl group");
  eval->add_option("file", eval_file, "root datum file")->required();
  eval->add_option("--word", word_text, "letters 'c1,..,cn;c1,..,cn;...'")->required();

  std::size_t enum_rank = 0;
  bool up_to_gl = false;
  auto* enumerate =
      app.add_subcommand("enumerate", "List every valid datum of a rank with verdicts");
  enumerate->add_option("--rank", enum_rank, "rank of the ambient lattice")->required();
  enumerate->add_flag("--up-to-gl", up_to_gl, "one representative per GL(n,F2) orbit");

  std::uint64_t seed = 1;
  std::uint64_t iters = 100;
  auto* selftest =
      app.add_subcommand("selftest", "Run the randomized axiom and property suites");
  selftest->add_option("--seed", seed, "random seed");
  selftest->add_option("--iters", iters, "instances per suite");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(check_file, out);
    if (app.got_subcommand(witness))
      return cmd_witness(witness_file, word_search, budget, out);
    if (app.got_subcommand(eval)) return cmd_eval(eval_file, word_text, out);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(enum_rank, up_to_gl, out);
    if (app.got_subcommand(selftest)) return cmd_selftest(seed, iters, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace wpbc
