#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "novikov/report.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw novikov::Error(novikov::ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic analysis of finite-dimensional Novikov algebras"};
  app.require_subcommand(1);

  bool json = false;
  int threads = 0;
  std::string path;
  novikov::ReportOptions opts;
  opts.budget = novikov::oracle::budget_from_env();

  app.add_flag("--json", json, "Print the JSON report");
  app.add_option("--threads", threads, "OpenMP threads for the oracle kernels")
      ->check(CLI::PositiveNumber);

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "Algebra definition file, or - for stdin")->required();
    sub->add_flag("--json", json, "Print the JSON report");
    sub->add_option("--threads", threads, "OpenMP threads for the oracle kernels")
        ->check(CLI::PositiveNumber);
    return sub;
  };

  add("check", "Identity checks and classification");

  add("series", "Right, derived, lie or full chain")
      ->add_option("--kind", opts.kind, "right|derived|lie|full")
      ->required()
      ->check(CLI::IsMember({"right", "derived", "lie", "full"}));

  CLI::App* radical = add("radical", "Baer or left-quasiregular radical");
  radical->add_option("--kind", opts.kind, "baer|lqr")
      ->required()
      ->check(CLI::IsMember({"baer", "lqr"}));
  radical->add_option("--seed", opts.seed, "Sampling seed");
  radical->add_option("--samples", opts.samples, "Sampled witnesses");

  CLI::App* qi = add("quasi-inverse", "Quasi-inverse of an element");
  qi->add_option("--element", opts.element, "Linear combination of basis names")->required();
  qi->add_option("--side", opts.side, "left|right")->check(CLI::IsMember({"left", "right"}));
  qi->add_flag("--lift", opts.lift, "Also build it by lifting from A/[A,A]");

  add("gd", "Gelfand-Dorfman product from a named derivation")
      ->add_option("--derivation", opts.derivation, "Map name")
      ->required();

  CLI::App* certify = add("certify", "Power bound certificate");
  certify->add_option("--claim", opts.claim, "lemma1|lemma3|theorem1")
      ->required()
      ->check(CLI::IsMember({"lemma1", "lemma3", "theorem1"}));
  certify->add_option("--element", opts.element, "Linear combination of basis names")->required();
  certify->add_option("--ideal", opts.ideal, "Generators spanning the ideal");
  certify->add_option("--n", opts.n, "Exponent")->required();

  CLI::App* orc = add("oracle", "Brute-force ground truth over a small prime field");
  orc->add_option("--task", opts.task, "tower|nilpotents|intersection")
      ->required()
      ->check(CLI::IsMember({"tower", "nilpotents", "intersection"}));
  orc->add_option("--kind", opts.kind, "domain|field (intersection)")
      ->check(CLI::IsMember({"domain", "field"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  opts.command = app.get_subcommands().front()->get_name();
  if (threads > 0) omp_set_num_threads(threads);

  novikov::Json report;
  int code = 0;
  try {
    const novikov::AlgebraDoc doc = novikov::parse_algebra_file(read_input(path));
    report = novikov::run_report(doc, opts);
  } catch (const novikov::ParseError& e) {
    report = novikov::parse_error_report(opts.command, e);
    code = 2;
  } catch (const novikov::Error& e) {
    report = novikov::error_report(opts.command, e.code(), e.what());
    code = 1;
  }

  if (json) {
    std::cout << novikov::render_json(report);
  } else if (code != 0) {
    const auto& err = report["error"];
    std::cerr << "error [" << err["code"].get<std::string>() << "]";
    if (err.contains("line"))
      std::cerr << " line " << err["line"].get<std::size_t>() << ", column "
                << err["column"].get<std::size_t>();
    std::cerr << ": " << err["message"].get<std::string>() << "\n";
  } else {
    std::cout << novikov::render_text(report);
  }
  return code;
}
