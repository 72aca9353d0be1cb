#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "landen/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact coefficient verification of the Landen series transformation "
               "and certified ellipse perimeters"};
  app.require_subcommand(1);

  std::string target = "all";
  std::optional<long> order, range;
  auto* verify = app.add_subcommand("verify", "run an identity or series-equality sweep");
  verify->add_option("target", target,
                     "lemma1|lemma2|vandermonde|knuth|absorption|step1|step2|theorem1|collapse|all");
  verify->add_option("--order", order, "series order for step1/step2/theorem1");
  verify->add_option("--range", range, "sweep bound for the identity families");

  std::string a = "1", b = "1", method = "both";
  long digits = 12;
  auto* perimeter = app.add_subcommand("perimeter", "ellipse perimeter with a certified error radius");
  perimeter->add_option("--a", a, "semi-major axis, rational or decimal text")->required();
  perimeter->add_option("--b", b, "semi-minor axis")->required();
  perimeter->add_option("--digits", digits, "guaranteed decimal digits (default 12)");
  perimeter->add_option("--method", method, "maclaurin|ivory|both (default both)");

  std::string eps = "1/1000000000", format = "json";
  auto* compare = app.add_subcommand("compare", "terms each series needs for a target error");
  compare->add_option("--a", a, "semi-major axis")->required();
  compare->add_option("--b", b, "semi-minor axis")->required();
  compare->add_option("--eps", eps, "target perimeter error, rational or decimal text");
  compare->add_option("--format", format, "json|csv (default json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  landen::cli::RunResult run;
  if (*verify) {
    if (order && range && *order != *range) {
      std::cerr << "verify: --order and --range are aliases for one bound; pass only one\n";
      return 2;
    }
    const long bound = order ? *order : range ? *range : 40;
    run = landen::cli::cmd_verify(target, bound);
  } else if (*perimeter) {
    run = landen::cli::cmd_perimeter(a, b, digits, method);
  } else {
    run = landen::cli::cmd_compare(a, b, eps, format);
  }
  std::cout << run.rendered;
  std::cerr << run.summary << '\n';
  return run.exit_code;
}
