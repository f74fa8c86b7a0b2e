#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "knotcolor/library.hpp"

namespace {

void add_knot_flags(CLI::App *app, cli::KnotFlags &k) {
  app->add_option("--gauss", k.gauss, "signed Gauss code, e.g. \"O1+ U2+ O3+ U1+ O2+ U3+\"");
  app->add_option("--braid", k.braid, "braid word, e.g. \"2: 1 1 1\"");
  app->add_option("--torus", k.torus, "torus knot p,q");
  app->add_option("--dt", k.dt, "Dowker-Thistlethwaite code, e.g. \"4 6 8 2\"");
  app->add_option("--fixture", k.fixture, "knot from a name,dt_code CSV: <path>:<name>");
}

void add_budget_flags(CLI::App *app, cli::BudgetFlags &b) {
  app->add_option("--time", b.seconds, "time budget in seconds (0 = none)");
  app->add_option("--nodes", b.nodes, "backtracking node / SAT decision budget (0 = none)");
  app->add_option("--assignments", b.assignments,
                  "brute force / braid enumeration budget (0 = none)")
      ->capture_default_str();
}

void add_library_flags(CLI::App *app, cli::LibraryFlags &l) {
  app->add_option("--library", l.path, "library file (default: $KNOTCOLOR_LIBRARY)");
  app->add_option("--generate", l.generate,
                  std::string("library generation spec (default: ") +
                      knotcolor::kDefaultLibrarySpec + ")");
}

const char *kEngineHelp = "brute | backtrack | braid | sat | external";

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quandle colourings of knot diagrams"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "knotcolor 0.1.0");

  cli::ColorOptions color_opts;
  auto *color = app.add_subcommand("color", "decide whether a nontrivial colouring exists");
  cli::ColorOptions count_opts;
  auto *count = app.add_subcommand("count", "count nontrivial colourings");
  for (auto [cmd, o] : {std::pair{color, &color_opts}, {count, &count_opts}}) {
    add_knot_flags(cmd, o->knot);
    cmd->add_option("--quandle", o->quandle, "dihedral:N | affine:N:T | conj:G:E | file:PATH:NAME")
        ->required();
    cmd->add_option("--engine", o->engine, kEngineHelp);
    cmd->add_option("--solver", o->solver, "external solver, external:<path>");
    add_budget_flags(cmd, o->budget);
    cmd->add_flag("--json", o->json, "JSON output");
    cmd->add_flag("--check", o->check, "cross-check against brute force when within budget");
  }

  cli::EncodeOptions encode_opts;
  auto *encode = app.add_subcommand("encode", "write the DIMACS CNF encoding");
  add_knot_flags(encode, encode_opts.knot);
  encode->add_option("--quandle", encode_opts.quandle, "quandle spec")->required();
  encode->add_option("-o,--output", encode_opts.output, "output file (default stdout)");
  encode->add_flag("--no-sb", encode_opts.no_sb, "omit the symmetry-breaking unit clause");
  encode->add_flag("--no-nontrivial", encode_opts.no_nontrivial, "omit nontriviality clauses");

  cli::CertifyOptions certify_opts;
  auto *certify = app.add_subcommand("certify", "search the library for a knottedness certificate");
  add_knot_flags(certify, certify_opts.knot);
  add_library_flags(certify, certify_opts.library);
  add_budget_flags(certify, certify_opts.budget);
  certify->add_flag("--prefilter", certify_opts.prefilter,
                    "skip affine quandles when the Alexander polynomial is trivial");
  certify->add_option("--jobs", certify_opts.jobs, "parallel workers")->check(CLI::PositiveNumber);
  certify->add_flag("--json", certify_opts.json, "JSON output");
  certify->add_option("-o,--output", certify_opts.output, "write the certificate JSON here");

  cli::DistinguishOptions dist_opts;
  auto *dist = app.add_subcommand("distinguish", "look for an invariant separating two knots");
  dist->add_option("first", dist_opts.first,
                   "knot spec: gauss:CODE | braid:WORD | torus:P,Q | dt:CODE | fixture:PATH:NAME | unknot")
      ->required();
  dist->add_option("second", dist_opts.second, "knot spec")->required();
  add_library_flags(dist, dist_opts.library);
  add_budget_flags(dist, dist_opts.budget);
  dist->add_flag("--count", dist_opts.count, "also compare colouring counts");
  dist->add_flag("--no-alexander", dist_opts.no_alexander, "skip the Alexander polynomial step");
  dist->add_flag("--json", dist_opts.json, "JSON output");

  cli::BenchOptions bench_opts;
  auto *bench = app.add_subcommand("bench", "colourability matrix of a knot family, as CSV");
  bench->add_option("--family", bench_opts.family, "T2:N,N,.. | T3:N,.. | fixtures:PATH")
      ->required();
  bench->add_option("--quandles", bench_opts.quandles,
                    "comma-separated quandle specs; dihedral-primes:P expands");
  add_library_flags(bench, bench_opts.library);
  bench->add_option("--engine", bench_opts.engine, kEngineHelp)->capture_default_str();
  bench->add_option("--solver", bench_opts.solver, "external solver, external:<path>");
  add_budget_flags(bench, bench_opts.budget);
  bench->add_option("--jobs", bench_opts.jobs, "parallel workers")->check(CLI::PositiveNumber);
  bench->add_option("-o,--output", bench_opts.output, "CSV file (default stdout)");

  std::string solve_path;
  auto *solve = app.add_subcommand("solve", "solve a DIMACS file (exit 10 SAT, 20 UNSAT)");
  solve->add_option("file", solve_path, "DIMACS CNF file")->required();

  std::string verify_path;
  bool verify_json = false;
  auto *verify = app.add_subcommand("verify", "re-check a certificate JSON file");
  verify->add_option("file", verify_path, "certificate file")->required();
  verify->add_flag("--json", verify_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitError;
  }

  try {
    if (*color)
      return cli::cmd_color(color_opts);
    if (*count)
      return cli::cmd_count(count_opts);
    if (*encode)
      return cli::cmd_encode(encode_opts);
    if (*certify)
      return cli::cmd_certify(certify_opts);
    if (*dist)
      return cli::cmd_distinguish(dist_opts);
    if (*bench)
      return cli::cmd_bench(bench_opts);
    if (*solve)
      return cli::cmd_solve(solve_path);
    if (*verify)
      return cli::cmd_verify(verify_path, verify_json);
  } catch (const std::exception &e) {
    std::cerr << "knotcolor: " << e.what() << "\n";
    return cli::kExitError;
  }
  return cli::kExitError;
}
