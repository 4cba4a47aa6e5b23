#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "invcat/commands.hpp"

namespace {

// Commands read the named file or stdin when the argument is absent or "-".
int with_input(const std::string& path, const std::function<int(std::istream&)>& body) {
  if (path.empty() || path == "-") return body(std::cin);
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return invcat::cli::exit_parse;
  }
  return body(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite inverse categories, ordered groupoids and their correspondences"};
  app.require_subcommand(1);
  bool serial = false;
  app.add_flag("--serial", serial, "use the serial reference kernels instead of OpenMP");

  auto* generate = app.add_subcommand("generate", "emit a generated structure file");
  std::vector<std::string> gen_args;
  generate->add_option("args", gen_args, "family and parameters")->expected(-1);

  std::string check_file;
  auto* check = app.add_subcommand("check", "validate a structure file");
  check->add_option("file", check_file, "input file (default stdin)");

  std::string construct_what, construct_file;
  bool construct_semi = false;
  auto* construct = app.add_subcommand("construct", "apply a construction: g, i, s or cg");
  construct->add_option("what", construct_what, "g | i | s | cg")->required();
  construct->add_option("file", construct_file, "input file (default stdin)");
  construct->add_flag("--semicategory", construct_semi,
                      "identity-free mode: no tops required, none produced");

  std::string roundtrip_file;
  bool roundtrip_semi = false;
  auto* roundtrip = app.add_subcommand("roundtrip", "verify the appropriate round trip");
  roundtrip->add_option("file", roundtrip_file, "input file (default stdin)");
  roundtrip->add_flag("--semicategory", roundtrip_semi, "identity-free mode");

  std::string info_file;
  auto* info = app.add_subcommand("info", "print counts, flags and block structure");
  info->add_option("file", info_file, "input file (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : invcat::cli::exit_parse;
  }

  const invcat::Exec exec = serial ? invcat::Exec::serial : invcat::Exec::parallel;

  if (generate->parsed())
    return invcat::cli::run_generate(gen_args, std::cout, std::cerr);
  if (check->parsed())
    return with_input(check_file,
                      [&](std::istream& in) { return invcat::cli::run_check(in, std::cout, std::cerr, exec); });
  if (construct->parsed())
    return with_input(construct_file, [&](std::istream& in) {
      return invcat::cli::run_construct(construct_what, construct_semi, in, std::cout, std::cerr,
                                        exec);
    });
  if (roundtrip->parsed())
    return with_input(roundtrip_file, [&](std::istream& in) {
      return invcat::cli::run_roundtrip(roundtrip_semi, in, std::cout, std::cerr);
    });
  if (info->parsed())
    return with_input(info_file,
                      [&](std::istream& in) { return invcat::cli::run_info(in, std::cout, std::cerr); });
  return invcat::cli::exit_parse;
}
