#include <iostream>

#include "CLI11.hpp"

#include "hocd/cli.hpp"

int main(int argc, char** argv) {
  hocd::cli::RunConfig cfg;
  CLI::App app{"Higher-order c-derivatives and c-differential uniformity over finite fields"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.option_defaults()->always_capture_default();

  app.add_option("--p", cfg.p, "Field characteristic");
  app.add_option("--n", cfg.n, "Extension degree")->required();
  app.add_option("--modulus", cfg.modulus, "Monic modulus coefficients, constant term first (e.g. 1,1,0,1)");
  app.add_option("--fn", cfg.function, "monomial:d | poly:<file> | lut:<file>");
  app.add_option("--op", cfg.op, "derive | spectrum | table1 | gold | quadratic | verify")
      ->check(CLI::IsMember({"derive", "spectrum", "table1", "gold", "quadratic", "verify"}));
  app.add_option("--t", cfg.t, "Derivative order");
  app.add_option("--c", cfg.c, "Multiplier: element index | all | subfield | nonone");
  app.add_option("--shifts", cfg.shifts, "Shift indices a1,...,at for --op derive");
  app.add_option("--k", cfg.k, "Gold parameter k (checked against the exponent)");
  app.add_option("--h", cfg.h, "Coefficient-field exponent h of a quadratic form");
  app.add_option("--json", cfg.json, "JSON report path (timing goes to <path>.meta.json)");
  app.add_option("--csv", cfg.csv, "CSV spectrum path");
  app.add_option("--threads", cfg.threads, "Worker threads (0: HOCD_THREADS or hardware concurrency)");
  app.add_flag("--reduce", cfg.reduce, "Fix a1 = 1 for monomials");
  app.add_option("--witness-cap", cfg.witness_cap, "Witnesses kept per report");
  app.add_option("--seed", cfg.seed, "Seed for randomized batches");
  app.add_option("--samples", cfg.samples, "Instances per property for --op verify");
  app.add_option("--c1-exclusion", cfg.c1_exclusion, "Tuples skipped at c = 1: vanishing | all-zero")
      ->check(CLI::IsMember({"vanishing", "all-zero"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hocd::cli::kInvalid;
  }
  return hocd::cli::run(cfg, std::cout, std::cerr);
}
