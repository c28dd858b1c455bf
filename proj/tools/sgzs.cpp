// sgzs: analyze, generate, and verify finite commutative semigroups given as
// Cayley tables.
//
// Exit codes: 0 success (including a conjecture counterexample, which is
// reported loudly but is a finding, not a failure), 1 usage or I/O error,
// 2 validation error in the input, 3 a proven claim failed.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "sgzs/catalog.hpp"
#include "sgzs/verify.hpp"
#include "sgzs/version.hpp"

namespace {

bool is_input_validation_error(sgzs::Error const& e) {
  return dynamic_cast<sgzs::SyntaxError const*>(&e) != nullptr
         || dynamic_cast<sgzs::EntryOutOfRange const*>(&e) != nullptr
         || dynamic_cast<sgzs::NotCommutative const*>(&e) != nullptr
         || dynamic_cast<sgzs::NotAssociative const*>(&e) != nullptr;
}

int run_analyze(std::string const& file, std::optional<int> cap,
                std::string const& format) {
  sgzs::InvariantReport report;
  try {
    report = sgzs::analyze_file(file, sgzs::AnalyzeOptions{cap});
  } catch (sgzs::IoError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (sgzs::Error const& e) {
    std::cerr << "error: " << file << ": " << e.what() << "\n";
    return is_input_validation_error(e) ? 2 : 1;
  }
  if (format == "json") {
    std::cout << sgzs::to_json(report).dump(2) << "\n";
  } else {
    std::cout << sgzs::to_text(report);
  }
  return 0;
}

int run_generate(int order, std::string const& out_dir) {
  std::vector<sgzs::CatalogEntry> entries;
  try {
    entries = sgzs::generate_commutative(order);
  } catch (sgzs::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create " << out_dir << ": " << ec.message() << "\n";
    return 1;
  }
  for (auto const& entry : entries) {
    auto const path = std::filesystem::path(out_dir)
                      / (entry.canonical.hash_hex() + ".sg");
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << path.string() << "\n";
      return 1;
    }
    out << sgzs::serialize(entry.semigroup);
  }
  std::cout << "wrote " << entries.size() << " classes of order " << order
            << " to " << out_dir << "\n";
  return 0;
}

int run_verify(sgzs::VerifyConfig const& config, std::string const& format,
               std::optional<std::string> const& out_path) {
  sgzs::RunReport run;
  try {
    run = sgzs::run_verification(config);
  } catch (std::filesystem::filesystem_error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (sgzs::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::string const rendered =
      format == "csv" ? sgzs::to_csv(run) : sgzs::to_json(run).dump(2) + "\n";
  if (out_path.has_value()) {
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << *out_path << "\n";
      return 1;
    }
    out << rendered;
  } else {
    std::cout << rendered;
  }
  if (run.aggregate.conjecture_failures > 0) {
    std::cerr << "\n";
    std::cerr << "!!! =============================================== !!!\n";
    std::cerr << "!!! CONJECTURE COUNTEREXAMPLE FOUND: "
              << run.aggregate.conjecture_failures
              << " conjecture claim(s) failed.\n";
    std::cerr << "!!! This is a reportable finding, not a tool defect.\n";
    std::cerr << "!!! See the claim witnesses in the report.\n";
    std::cerr << "!!! =============================================== !!!\n";
  }
  if (run.aggregate.theorem_failures > 0) {
    std::cerr << "error: " << run.aggregate.theorem_failures
              << " proven claim(s) failed; this indicates a defect.\n";
  }
  if (run.aggregate.entries_failed > 0) {
    std::cerr << "warning: " << run.aggregate.entries_failed
              << " input(s) could not be analyzed; see report.\n";
  }
  return sgzs::exit_code_for(run);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-sum invariants and structural verification for finite "
               "commutative semigroups"};
  app.set_version_flag("--version", std::string(sgzs::kVersion));
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "analyze one Cayley-table file");
  std::string analyze_file_arg;
  std::optional<int> analyze_cap;
  std::string analyze_format = "text";
  analyze->add_option("file", analyze_file_arg, "Cayley-table file")->required();
  analyze->add_option("--cap", analyze_cap, "cap for the E search (default D+kappa+2)");
  analyze->add_option("--format", analyze_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  auto* generate = app.add_subcommand("generate",
                                      "write every isomorphism class of a given order");
  int generate_order = 0;
  std::string generate_out;
  generate->add_option("--order", generate_order, "order to generate")->required();
  generate->add_option("--out", generate_out, "output directory")->required();

  auto* verify = app.add_subcommand("verify",
                                    "analyze a catalog and check every claim");
  std::optional<int> verify_order;
  std::optional<std::string> verify_dir;
  std::optional<int> verify_cap;
  int verify_jobs = 1;
  std::string verify_format = "json";
  std::optional<std::string> verify_out;
  auto* order_opt = verify->add_option("--order", verify_order, "generate this order");
  auto* dir_opt = verify->add_option("--dir", verify_dir, "read files from this directory");
  verify->add_option("--cap", verify_cap, "cap for the E search (default D+kappa+2)");
  verify->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", verify_out, "write the report to this file");
  order_opt->excludes(dir_opt);

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    return run_analyze(analyze_file_arg, analyze_cap, analyze_format);
  }
  if (generate->parsed()) {
    return run_generate(generate_order, generate_out);
  }
  if (verify->parsed()) {
    if (!verify_order.has_value() && !verify_dir.has_value()) {
      std::cerr << "error: verify needs --order or --dir\n";
      return 1;
    }
    sgzs::VerifyConfig config;
    config.order = verify_order;
    config.dir = verify_dir;
    config.cap = verify_cap;
    config.jobs = verify_jobs;
    return run_verify(config, verify_format, verify_out);
  }
  return 1;
}
