/**
 * @file cli.hpp
 * @brief Command-line front end. `run` is the whole program minus process setup.
 */
#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace fermat::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kComputationalError = 2 };

/// Parses `re`, `imi`, `re+imi` or `re-imi` (e.g. "2", "-0.5i", "1+0i", "3e-2-4i").
std::complex<double> parse_complex(const std::string& text);

/// Comma-separated list of parse_complex values.
std::vector<std::complex<double>> parse_complex_list(const std::string& text);

/// Inverse of parse_complex, always in the `re+imi` form, 17 significant digits.
std::string format_complex(std::complex<double> z);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermat::cli
