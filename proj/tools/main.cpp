// bbgeo command line: analyze / simulate / search / catalog over JSON
// problem configs. Talks to the library exclusively through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bbgeo.h"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << text;
}

struct CommonOpts {
  std::string input;
  std::string output;
  double tolerance = 0.0;
  std::vector<double> delta_t;
  long budget = 0;
  int top_k = 0;
};

bbgeo_options to_options(const CommonOpts& opts) {
  bbgeo_options o{};
  o.tolerance = opts.tolerance;
  o.delta_t = opts.delta_t.empty() ? nullptr : opts.delta_t.data();
  o.delta_t_count = static_cast<int32_t>(opts.delta_t.size());
  o.search_budget = opts.budget;
  o.search_top_k = opts.top_k;
  return o;
}

int emit(bbgeo_status status, char* report, const std::string& output) {
  if (status != BBGEO_OK) {
    std::cerr << "error (" << bbgeo_status_name(status) << "): " << bbgeo_last_error()
              << "\n";
    return 1;
  }
  write_output(output, report);
  bbgeo_string_free(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometric analysis and design of bang-bang pulse sequences"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string format = "structured";

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("-i,--input", opts.input, "problem config JSON ('-' for stdin)")
          ->required();
    cmd->add_option("-o,--output", opts.output, "output path (default stdout)");
    cmd->add_option("--tolerance", opts.tolerance, "override the config tolerance");
    return cmd;
  };

  CLI::App* analyze = add_common(
      app.add_subcommand("analyze", "coordinate-level averaging report"), true);
  CLI::App* simulate = add_common(
      app.add_subcommand("simulate", "finite-interval convergence scan"), true);
  simulate->add_option("--format", format, "'structured' or 'csv'")
      ->check(CLI::IsMember({"structured", "csv"}));
  simulate->add_option("--delta-t", opts.delta_t,
                       "override the config interval list (descending)");
  CLI::App* search = add_common(
      app.add_subcommand("search", "exhaustive pulse-set search"), true);
  search->add_option("--budget", opts.budget, "subset-count cap");
  search->add_option("--top-k", opts.top_k, "fallback result count");
  CLI::App* catalog =
      add_common(app.add_subcommand("catalog", "list the named sequences"), false);

  CLI11_PARSE(app, argc, argv);

  try {
    const bbgeo_options options = to_options(opts);
    char* report = nullptr;
    bbgeo_status status = BBGEO_ERROR_INTERNAL;
    if (analyze->parsed())
      status = bbgeo_run_analyze(read_input(opts.input).c_str(), &options, &report);
    else if (simulate->parsed())
      status = bbgeo_run_simulate(read_input(opts.input).c_str(), format.c_str(),
                                  &options, &report);
    else if (search->parsed())
      status = bbgeo_run_search(read_input(opts.input).c_str(), &options, &report);
    else if (catalog->parsed())
      status = bbgeo_run_catalog(&report);
    return emit(status, report, opts.output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
