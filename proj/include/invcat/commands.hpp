#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "invcat/report.hpp"

// Subcommand bodies, stream-based so tests can drive them directly. Exit
// codes: 0 success, 1 usage or parse error, 2 validation failure, 3 internal
// structural-bug report.
namespace invcat::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_parse = 1;
inline constexpr int exit_validation = 2;
inline constexpr int exit_structural = 3;

int run_generate(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_check(std::istream& in, std::ostream& out, std::ostream& err, Exec exec);
int run_construct(const std::string& what, bool semicategory, std::istream& in, std::ostream& out,
                  std::ostream& err, Exec exec);
int run_roundtrip(bool semicategory, std::istream& in, std::ostream& out, std::ostream& err);
int run_info(std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace invcat::cli
