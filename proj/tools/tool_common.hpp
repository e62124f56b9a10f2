#pragma once

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>

namespace zdtool {

inline constexpr const char* version_string = "sidon-designs 1.0.0";

// Exit codes shared by all tools:
// 0 success / certified, 1 property violated, 2 invalid input, 3 resource cap.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_cap = 3;

inline void add_version_flags(CLI::App& app, bool& show_version,
                              bool& verbose) {
  app.add_flag("--version", show_version, "print version and exit");
  app.add_flag("--verbose", verbose, "with --version, also print defaults");
}

inline int print_version(bool verbose) {
  std::cout << version_string << "\n";
  if (verbose) {
    std::cout << "defaults:\n"
              << "  field-cap: " << (std::int64_t{1} << 20) << "\n"
              << "  dense-cap: 48\n"
              << "  direct tolerance: 1e-9 * d\n"
              << "  potential tolerance: 1e-8 * d^2\n"
              << "  bound (b) k search cap: 16\n"
              << "  m_exact cap: d <= 6\n"
              << "  sic-data env var: SIDON_SIC_DATA\n";
  }
  return exit_ok;
}

}  // namespace zdtool
