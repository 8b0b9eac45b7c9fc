#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cantor/catalog.hpp"

namespace {

int write_payload(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open \"" << out_path << "\" for writing\n";
    return 2;
  }
  out << payload;
  out.close();
  if (!out) {
    std::cerr << "error: write to \"" << out_path << "\" failed\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate real algebraic numbers in Cantor height order"};
  app.require_subcommand(1);

  int jobs = 1;
  app.add_option("--jobs", jobs, "Concurrent (height, degree) tasks; output-invariant")
      ->check(CLI::PositiveNumber);

  auto* cmd_enum = app.add_subcommand("enumerate", "Emit the ordered catalog");
  cmd_enum->fallthrough();
  int enum_height = 0;
  int precision = 11;
  std::string format = "csv";
  std::string out_path;
  cmd_enum->add_option("--max-height", enum_height, "Largest height to enumerate")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_enum->add_option("--precision", precision, "Refine values below 10^-D; prints D-1 digits")
      ->check(CLI::Range(2, 1000));
  cmd_enum->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  cmd_enum->add_option("--out", out_path, "Write to a file instead of stdout");

  auto* cmd_phi = app.add_subcommand("phi", "Print the count table Phi(n,k) and totals");
  cmd_phi->fallthrough();
  int phi_height = 0;
  cmd_phi->add_option("--max-height", phi_height, "Largest height to count")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* cmd_verify = app.add_subcommand("verify", "Check the catalog against a reference CSV");
  cmd_verify->fallthrough();
  int verify_height = 7;
  std::string golden_path;
  std::string errata_path;
  cmd_verify->add_option("--max-height", verify_height, "Largest height to rebuild and check")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--golden", golden_path, "Reference CSV path")->required();
  cmd_verify->add_option("--errata", errata_path, "Errata CSV applied to the reference");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_enum->parsed()) {
      const auto catalog = cantor::build_catalog(enum_height, jobs);
      const int digits = precision - 1;
      std::string payload;
      if (format == "csv")
        payload = cantor::emit_csv(catalog, digits);
      else if (format == "json")
        payload = cantor::emit_json(catalog, digits);
      else
        payload = cantor::emit_text(catalog, digits);
      return write_payload(payload, out_path);
    }
    if (cmd_phi->parsed()) {
      const auto catalog = cantor::build_catalog(phi_height, jobs);
      std::cout << cantor::format_phi(cantor::phi_table(catalog, phi_height));
      return 0;
    }
    // verify
    const auto catalog = cantor::build_catalog(verify_height, jobs);
    const auto outcome = cantor::verify_golden(catalog, golden_path, errata_path);
    if (outcome.ok()) {
      std::cout << outcome.rows_checked << "/" << outcome.rows_checked << " rows match\n";
      return 0;
    }
    for (const auto& m : outcome.mismatches) std::cout << m << "\n";
    std::cout << outcome.mismatches.size() << " mismatch(es) in " << outcome.rows_checked
              << " rows\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
