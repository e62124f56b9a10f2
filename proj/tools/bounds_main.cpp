#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "tool_common.hpp"
#include "zdesign/zauner_bounds.hpp"

using namespace zdesign;

namespace {

SicData resolve_sic_data(const std::string& path_flag) {
  if (!path_flag.empty()) return load_sic_data(path_flag);
  if (const char* env = std::getenv("SIDON_SIC_DATA")) {
    return load_sic_data(env);
  }
  return default_sic_data();
}

int run_table(std::int64_t dmax, const std::string& format,
              const std::string& sic_path, const std::string& out_path) {
  if (dmax < 2 || dmax > 2000) {
    throw ParseError("--dmax must be in [2, 2000]");
  }
  if (format != "csv" && format != "md") {
    throw ParseError("format must be csv or md");
  }
  const SicData data = resolve_sic_data(sic_path);
  const auto rows = table_records(dmax, data);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw ParseError("cannot open output file: " + out_path);
    os = &file;
  }
  if (format == "csv") {
    write_csv(*os, rows, data);
  } else {
    write_markdown(*os, rows, data);
  }
  return zdtool::exit_ok;
}

int run_mdim(std::int64_t d, bool exact) {
  if (d < 1) throw ParseError("--d must be >= 1");
  if (exact) {
    std::cout << m_exact(d) << " (exact)\n";
  } else {
    const MKnown m = m_known(d);
    std::cout << m.group_order << " via " << m_known_label(m) << "\n";
  }
  return zdtool::exit_ok;
}

int run_asymptotic(std::int64_t dmax) {
  if (dmax < 2) throw ParseError("--dmax must be >= 2");
  const AsymptoticReport rep = asymptotic_check(dmax);
  std::cout << "d <= " << dmax << "\n"
            << "max (m_known(d)+d-d^2)/d^1.525 = " << rep.max_ratio
            << " at d = " << rep.argmax << "\n"
            << "m_known(d) <= p(d)^2: " << (rep.prime_square_ok ? "yes" : "NO")
            << "\n"
            << "m_known(d)+d >= d^2+1: " << (rep.lower_ok ? "yes" : "NO")
            << "\n";
  return (rep.prime_square_ok && rep.lower_ok) ? zdtool::exit_ok
                                               : zdtool::exit_violation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper bounds on the minimal weighted 2-design size n(d)"};
  bool show_version = false, verbose = false;
  zdtool::add_version_flags(app, show_version, verbose);
  int threads = 1;
  app.add_option("--threads", threads,
                 "maximum worker threads (implementation is serial)");

  auto* table = app.add_subcommand("table", "per-dimension bound comparison");
  std::int64_t dmax = 150;
  std::string format = "csv", sic_path, out_path;
  table->add_option("--dmax", dmax, "largest dimension (default 150)");
  table->add_option("--format", format, "csv | md");
  table->add_option("--sic-data", sic_path, "known-SIC dimension data file");
  table->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* mdim = app.add_subcommand(
      "mdim", "smallest group order with a size-d Sidon set");
  std::int64_t d = 0;
  bool exact = false;
  mdim->add_option("--d", d, "Sidon set size")->required();
  mdim->add_flag("--exact", exact, "exhaustive search (small d only)");

  auto* asym = app.add_subcommand("asymptotic",
                                  "sweep the d^2 + O(d^1.525) bound");
  std::int64_t asym_dmax = 2000;
  asym->add_option("--dmax", asym_dmax, "largest dimension (default 2000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? zdtool::exit_ok : zdtool::exit_invalid;
  }
  if (show_version) return zdtool::print_version(verbose);

  try {
    if (table->parsed()) return run_table(dmax, format, sic_path, out_path);
    if (mdim->parsed()) return run_mdim(d, exact);
    if (asym->parsed()) return run_asymptotic(asym_dmax);
    std::cerr << app.help();
    return zdtool::exit_invalid;
  } catch (const DTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return zdtool::exit_cap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return zdtool::exit_invalid;
  }
}
