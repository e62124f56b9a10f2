#include <fstream>
#include <iostream>
#include <string>

#include "tool_common.hpp"
#include "zdesign/bh_design.hpp"

using namespace zdesign;

namespace {

int run_build(const std::string& in_path, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw ParseError("cannot open input file: " + in_path);
  const SidonSet s = read_sidon(in);
  const WeightedDesign d = bodmann_haas(s);
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot open output file: " + out_path);
  write_design(out, d);
  std::cout << "dim " << d.dim << ", " << d.vectors.size() << " vectors\n";
  return zdtool::exit_ok;
}

int run_verify(const std::string& in_path, const std::string& method,
               double tol, int dense_cap) {
  std::ifstream in(in_path);
  if (!in) throw ParseError("cannot open input file: " + in_path);
  const WeightedDesign d = read_design(in);

  const bool want_direct = method == "direct" || method == "both";
  const bool want_potential = method == "potential" || method == "both";
  if (!want_direct && !want_potential) {
    throw ParseError("method must be direct, potential, or both");
  }
  if (want_direct && d.dim > dense_cap) {
    std::cerr << "error: direct method requested for d = " << d.dim
              << " above dense cap " << dense_cap << "\n";
    return zdtool::exit_cap;
  }

  bool certified = true;
  if (want_direct) {
    const double residual = verify_direct(d, dense_cap);
    const bool ok =
        tol >= 0 ? residual <= tol : direct_certified(residual, d.dim);
    std::cout << "direct residual: " << residual
              << (ok ? " (certified)" : " (FAILED)") << "\n";
    certified = certified && ok;
  }
  if (want_potential) {
    FramePotentialOptions opts;
    opts.abs_tol = tol;
    const auto fp = verify_frame_potential(d, opts);
    std::cout << "trace: " << fp.trace_m << ", potential: " << fp.potential
              << ", target: " << d.dim * (d.dim + 1.0) / 2.0
              << (fp.certified ? " (certified)" : " (FAILED)") << "\n";
    certified = certified && fp.certified;
  }
  return certified ? zdtool::exit_ok : zdtool::exit_violation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bodmann-Haas weighted 2-design construction and certification"};
  bool show_version = false, verbose = false;
  zdtool::add_version_flags(app, show_version, verbose);
  int threads = 1;
  app.add_option("--threads", threads,
                 "maximum worker threads (implementation is serial)");

  auto* build = app.add_subcommand("build", "apply the construction to a set");
  std::string build_in, build_out;
  build->add_option("-i,--input", build_in, "serialized Sidon set")->required();
  build->add_option("-o,--output", build_out, "design output file")->required();

  auto* verify = app.add_subcommand("verify", "certify the 2-design identity");
  std::string verify_in, method = "both";
  double tol = -1.0;
  int dense_cap = default_dense_cap;
  verify->add_option("-i,--input", verify_in, "serialized design")->required();
  verify->add_option("--method", method, "direct | potential | both");
  verify->add_option("--tol", tol, "absolute tolerance override");
  verify->add_option("--dense-cap", dense_cap, "max d for the direct method");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? zdtool::exit_ok : zdtool::exit_invalid;
  }
  if (show_version) return zdtool::print_version(verbose);

  try {
    if (build->parsed()) return run_build(build_in, build_out);
    if (verify->parsed()) return run_verify(verify_in, method, tol, dense_cap);
    std::cerr << app.help();
    return zdtool::exit_invalid;
  } catch (const DimensionTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return zdtool::exit_cap;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return zdtool::exit_cap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return zdtool::exit_invalid;
  }
}
