#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polydc/commands.hpp"

namespace {

bool parse_sizes(const std::string& text, int& lo, int& hi) {
  auto pos = text.find("..");
  if (pos == std::string::npos || pos == 0 || pos + 2 == text.size()) return false;
  try {
    std::size_t used = 0;
    lo = std::stoi(text.substr(0, pos), &used);
    if (used != pos) return false;
    std::string tail = text.substr(pos + 2);
    hi = std::stoi(tail, &used);
    if (used != tail.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for polyhedral d.c. optimization problems"};
  app.require_subcommand(1);

  std::string check_file;
  std::string check_method = "both";
  CLI::App* check = app.add_subcommand("check", "run the existence test on a problem file");
  check->add_option("file", check_file, "problem file (json)")->required();
  check->add_option("--method", check_method, "primal, dual, or both")
      ->check(CLI::IsMember({"primal", "dual", "both"}))
      ->capture_default_str();

  std::string solve_file;
  std::string solve_method = "primal";
  std::string solve_output = "json";
  CLI::App* solve = app.add_subcommand("solve", "solve a problem file to optimality");
  solve->add_option("file", solve_file, "problem file (json)")->required();
  solve->add_option("--method", solve_method, "primal or dual")
      ->check(CLI::IsMember({"primal", "dual"}))
      ->capture_default_str();
  solve->add_option("--output", solve_output, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string gen_family;
  int gen_n = 0;
  int gen_mg = 2;
  int gen_mh = 1;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a benchmark instance");
  gen->add_option("family", gen_family, "instance family")
      ->required()
      ->check(CLI::IsMember({"ex1", "ex2"}));
  gen->add_option("--n", gen_n, "number of variables")->required();
  gen->add_option("--mg", gen_mg, "anchor count for g (ex1 only)")->capture_default_str();
  gen->add_option("--mh", gen_mh, "anchor count for h (ex1 only)")->capture_default_str();
  gen->add_option("--out", gen_out, "output problem file")->required();

  std::string bench_family;
  std::string bench_sizes;
  int bench_mg = 2;
  int bench_mh = 1;
  std::string bench_out;
  CLI::App* bench = app.add_subcommand("bench", "time both methods over a range of sizes");
  bench->add_option("family", bench_family, "instance family")
      ->required()
      ->check(CLI::IsMember({"ex1", "ex2"}));
  bench->add_option("--sizes", bench_sizes, "size range a..b")->required();
  bench->add_option("--mg", bench_mg, "anchor count for g (ex1 only)")->capture_default_str();
  bench->add_option("--mh", bench_mh, "anchor count for h (ex1 only)")->capture_default_str();
  bench->add_option("--out", bench_out, "output csv file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (check->parsed()) return polydc::run_check(check_file, check_method, std::cout, std::cerr);
  if (solve->parsed())
    return polydc::run_solve(solve_file, solve_method, solve_output, std::cout, std::cerr);
  if (gen->parsed()) return polydc::run_gen(gen_family, gen_n, gen_mg, gen_mh, gen_out, std::cerr);

  int lo = 0;
  int hi = 0;
  if (!parse_sizes(bench_sizes, lo, hi)) {
    std::cerr << "error: --sizes expects a range like 2..6\n";
    return 1;
  }
  return polydc::run_bench(bench_family, lo, hi, bench_mg, bench_mh, bench_out, std::cerr);
}
