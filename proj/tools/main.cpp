// twobraid-verify: runs named exact-arithmetic verification suites over the
// string crossed module (or a user-supplied finite crossed module) and emits
// a deterministic report.
//
// Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage or
// parse error, 3 span-oracle resource cap exceeded.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "twobraid/model_io.hpp"
#include "twobraid/suites.hpp"

int main(int argc, char** argv) {
  using namespace twobraid;

  CLI::App app{
      "Exact verification suites for infinitesimal 2-braidings and the "
      "categorified Knizhnik-Zamolodchikov 2-connection"};
  app.get_formatter()->column_width(28);

  std::string suite;
  std::string suite_list;
  for (const std::string& s : suite_names()) suite_list += s + ", ";
  suite_list += "all";
  app.add_option("suite", suite, "Suite to run: " + suite_list)->required();

  SuiteConfig cfg;
  std::string c_text = "-2/1";
  std::string report_format = "text";
  app.add_option("--degree-bound", cfg.degree_bound,
                 "Basis enumeration bound for semi-decidable equalities")
      ->default_val(6);
  app.add_option("--n", cfg.n, "Tensor arity where applicable")
      ->default_val(4);
  app.add_option("--c", c_text,
                 "Scalar multiple of the kernel unit used for the tensor's "
                 "central element, as p/q")
      ->default_val("-2/1");
  app.add_option("--seed", cfg.seed, "Seed for randomized property checks")
      ->default_val(0);
  app.add_option("--oracle", cfg.oracle,
                 "Quotient-space equality oracle: rewrite | span | both "
                 "(default: both for n <= 3, rewrite above)")
      ->check(CLI::IsMember({"rewrite", "span", "both"}));
  app.add_option("--report", report_format, "Output format: json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("text");
  app.add_option("--model", cfg.model_path,
                 "Crossed-module instance file (default: built-in string "
                 "module; applies to the module-generic suites)");
  app.add_flag("--timings", cfg.timings,
               "Include wall-clock timings (off by default so reports are "
               "byte-identical across runs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.c = parse_rational(c_text);
  } catch (const ParseError& e) {
    std::cerr << "error: invalid --c value: " << e.what() << "\n";
    return 2;
  }

  try {
    SuiteReport rep = run_suite(suite, cfg);
    std::cout << (report_format == "json" ? to_json(rep) : to_text(rep));
    return rep.all_pass() ? 0 : 1;
  } catch (const UnknownSuiteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ModelError& e) {
    std::cerr << "error: model: " << e.what() << "\n";
    return 2;
  } catch (const ResourceCapError& e) {
    std::cerr << "error: resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
