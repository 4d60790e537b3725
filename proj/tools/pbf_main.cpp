#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pbf/report.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pbf::parse_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oscillation and positive bidiagonal factorization of banded Hessenberg matrices"};
  app.require_subcommand(1);

  std::string file;
  std::size_t depth = 10;
  bool force_exact = false, force_float = false;
  auto* analyze = app.add_subcommand("analyze", "oscillation verdicts, LU factors, convergents");
  analyze->add_option("file", file, "matrix spec (JSON)")->required();
  analyze->add_option("--depth", depth, "truncation size index N");
  auto* ex = analyze->add_flag("--exact", force_exact, "force exact arithmetic");
  analyze->add_flag("--float", force_float, "force float64 arithmetic")->excludes(ex);

  std::string alpha2;
  auto* factorize = app.add_subcommand("factorize", "positive bidiagonal factorization");
  factorize->add_option("file", file, "matrix spec (JSON)")->required();
  factorize->add_option("--alpha2", alpha2, "seed alpha_2 (default: midpoint of the gate)");
  factorize->add_option("--depth", depth, "truncation size index N");

  std::string retract_s;
  std::size_t tail_k = 0, shifted_k = 0;
  bool do_check = false;
  auto* transform = app.add_subcommand("transform", "retraction, tail and check constructions");
  transform->add_option("file", file, "matrix spec (JSON)")->required();
  auto* opt_retract = transform->add_option("--retract", retract_s, "retraction parameter s");
  auto* opt_tail = transform->add_option("--tail", tail_k, "tail start index k");
  auto* opt_check = transform->add_flag("--check", do_check, "check-matrix bands");
  auto* opt_shifted =
      transform->add_option("--shifted", shifted_k, "shifted check start index k")
          ->needs(opt_check);
  opt_retract->excludes(opt_tail)->excludes(opt_check);
  opt_tail->excludes(opt_check);

  std::size_t cf_k = 1, cf_maxn = 20;
  std::string tol = "1e-9", format = "json";
  auto* convergents = app.add_subcommand("convergents", "plot-ready continued fraction data");
  convergents->add_option("file", file, "matrix spec (JSON)")->required();
  convergents->add_option("--k", cf_k, "continued fraction start index");
  convergents->add_option("--max-n", cf_maxn, "largest convergent index N");
  convergents->add_option("--tol", tol, "convergence tolerance");
  convergents->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    pbf::Json input = pbf::parse_spec_json(slurp(file));
    if (app.got_subcommand(analyze)) {
      std::optional<std::string> override;
      if (force_exact) override = "exact";
      if (force_float) override = "float64";
      std::cout << pbf::render_report(pbf::run_analyze(input, depth, override));
    } else if (app.got_subcommand(factorize)) {
      std::optional<std::string> a2;
      if (!alpha2.empty()) a2 = alpha2;
      std::cout << pbf::render_report(pbf::run_factorize(input, a2, depth));
    } else if (app.got_subcommand(transform)) {
      std::string kind;
      std::optional<std::string> s;
      std::optional<std::size_t> k;
      if (*opt_retract) {
        kind = "retract";
        s = retract_s;
      } else if (*opt_tail) {
        kind = "tail";
        k = tail_k;
      } else if (*opt_shifted) {
        kind = "check_shifted";
        k = shifted_k;
      } else if (*opt_check) {
        kind = "check";
      } else {
        std::cerr << "transform needs one of --retract, --tail, --check\n";
        return 1;
      }
      std::cout << pbf::render_report(pbf::run_transform(input, kind, s, k));
    } else {
      std::cout << pbf::run_convergents(input, cf_k, cf_maxn, tol, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pbf::exit_code_for(e);
  }
  return 0;
}
