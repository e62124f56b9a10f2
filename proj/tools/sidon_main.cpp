#include <fstream>
#include <iostream>
#include <string>

#include "tool_common.hpp"
#include "zdesign/sidon.hpp"

using namespace zdesign;

namespace {

int run_gen(const std::string& family, std::int64_t q, std::int64_t remove_k,
            bool trace_zero, std::int64_t field_cap,
            const std::string& out_path) {
  SidonSet s;
  switch (family_from_name(family)) {
    case Family::ErdosTuran: s = erdos_turan(q, field_cap); break;
    case Family::Singer: s = singer(q, field_cap); break;
    case Family::Bose: s = bose(q, trace_zero, field_cap); break;
    case Family::Spence: s = spence(q, field_cap); break;
    case Family::Hughes: s = hughes(q, field_cap); break;
    case Family::Custom:
      throw ParseError("family must be one of erdos-turan, singer, bose, "
                       "spence, hughes");
  }
  if (remove_k > 0) s = remove_points(std::move(s), remove_k);

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open output file: " + out_path);
    write_sidon(out, s);
    std::cout << "(" << s.group.order << ", " << s.elements.size() << ")\n";
  } else {
    write_sidon(std::cout, s);
    std::cerr << "(" << s.group.order << ", " << s.elements.size() << ")\n";
  }
  return zdtool::exit_ok;
}

int run_verify(const std::string& in_path) {
  std::ifstream in(in_path);
  if (!in) throw ParseError("cannot open input file: " + in_path);
  const SidonSet s = read_sidon(in);
  const auto violation = find_violation(s);
  if (!violation) {
    std::cout << "SIDON\n";
    return zdtool::exit_ok;
  }
  auto render = [](const GroupElement& e) {
    std::string out = "(";
    for (size_t j = 0; j < e.residues.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(e.residues[j]);
    }
    return out + ")";
  };
  std::cout << "NOT SIDON: " << render(violation->a) << " + "
            << render(violation->b) << " = " << render(violation->c) << " + "
            << render(violation->d) << "\n";
  return zdtool::exit_violation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sidon set construction and verification"};
  bool show_version = false, verbose = false;
  zdtool::add_version_flags(app, show_version, verbose);
  int threads = 1;
  app.add_option("--threads", threads,
                 "maximum worker threads (implementation is serial)");

  auto* gen = app.add_subcommand("gen", "construct a Sidon set family member");
  std::string family;
  std::int64_t q = 0, remove_k = 0;
  std::int64_t field_cap = FieldTable::default_cap;
  bool trace_zero = false;
  std::string out_path;
  gen->add_option("--family", family,
                  "erdos-turan | singer | bose | spence | hughes")
      ->required();
  gen->add_option("--q", q, "prime power parameter")->required();
  gen->add_option("--remove", remove_k, "points to trim from the end");
  gen->add_flag("--trace-zero", trace_zero,
                "for bose: build the literal trace-zero level set");
  gen->add_option("--field-cap", field_cap, "max field size to tabulate");
  gen->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check the Sidon property");
  std::string in_path;
  verify->add_option("-i,--input", in_path, "serialized Sidon set")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? zdtool::exit_ok : zdtool::exit_invalid;
  }
  if (show_version) return zdtool::print_version(verbose);

  try {
    if (gen->parsed()) {
      return run_gen(family, q, remove_k, trace_zero, field_cap, out_path);
    }
    if (verify->parsed()) return run_verify(in_path);
    std::cerr << app.help();
    return zdtool::exit_invalid;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return zdtool::exit_cap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return zdtool::exit_invalid;
  }
}
