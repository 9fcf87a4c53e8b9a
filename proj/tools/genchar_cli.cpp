// Command-line front end: generalized-character tables, single evaluations,
// marked-class listings, classical character values, and the verification
// harness.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genchar/characters.hpp"
#include "genchar/partition.hpp"
#include "genchar/permutation.hpp"
#include "genchar/spherical.hpp"
#include "genchar/table_io.hpp"
#include "genchar/verify.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

int cmd_table(int n, const std::string& format, const std::string& out_path) {
  if (n < 2 || n > 8) {
    std::cerr << "error: n out of range (2..8)\n";
    return kExitUsage;
  }
  const genchar::TableFile file = genchar::to_table_file(genchar::build_table(n));
  const std::string text =
      format == "csv" ? genchar::emit_csv(file) : genchar::emit_json(file);
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  out << text;
  return out.good() ? 0 : kExitUsage;
}

int cmd_eval(const std::string& lam_str, const std::string& mu_str,
             const std::string& perm_str) {
  const genchar::Partition lam = genchar::parse_partition(lam_str);
  const genchar::Partition mu = genchar::parse_partition(mu_str);
  const genchar::Permutation theta = genchar::parse_permutation(perm_str, lam.n());
  std::cout << genchar::to_fraction_string(genchar::phi_sfs(lam, mu, theta)) << "\n";
  return 0;
}

int cmd_verify(int n, const std::string& oracle_list, bool strict) {
  std::vector<std::string> oracles;
  std::stringstream ss(oracle_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok != "sfs" && tok != "lemma" && tok != "spherical" && tok != "travis") {
      std::cerr << "error: unknown oracle '" << tok << "'\n";
      return kExitUsage;
    }
    oracles.push_back(tok);
  }
  const auto results = genchar::run_verification(n, oracles);
  bool failed = false;
  for (const auto& r : results) {
    switch (r.status) {
      case genchar::CheckStatus::pass:
        std::cout << "PASS " << r.name << "\n";
        break;
      case genchar::CheckStatus::fail:
        std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
        failed = true;
        break;
      case genchar::CheckStatus::skip:
        std::cout << "SKIP " << r.name << ": " << r.detail << "\n";
        if (strict) failed = true;
        break;
    }
  }
  return failed ? kExitVerifyFailure : 0;
}

int cmd_classes(int n) {
  for (const auto& [mc, rep] : genchar::enumerate_marked_class_reps(n))
    std::cout << "type=" << genchar::to_string(mc.cycle_type) << " mark=" << mc.mark
              << " size=" << genchar::marked_class_size(mc)
              << " rep=" << genchar::to_cycle_string(rep) << "\n";
  return 0;
}

int cmd_character(const std::string& lam_str, const std::string& type_str) {
  const genchar::Partition lam = genchar::parse_partition(lam_str);
  const genchar::Partition ct = genchar::parse_partition(type_str);
  std::cout << genchar::mn_character(lam, ct) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized characters of the symmetric group"};
  app.require_subcommand(1);

  int n = 0;
  std::string format = "json", out_path, lam_str, mu_str, perm_str, type_str;
  std::string oracle_list = "sfs,lemma,spherical,travis";
  bool strict = false;

  auto* table = app.add_subcommand("table", "Write the full value table for degree n");
  table->add_option("--n", n, "degree of the symmetric group")->required();
  table->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  table->add_option("--out", out_path, "output path (stdout when omitted)");

  auto* eval = app.add_subcommand("eval", "Evaluate one generalized character");
  eval->add_option("--lam", lam_str, "partition of n, e.g. 2,1")->required();
  eval->add_option("--mu", mu_str, "partition of n-1 covered by lam")->required();
  eval->add_option("--perm", perm_str, "permutation in cycle notation")->required();

  auto* verify = app.add_subcommand("verify", "Run the cross-verification suite");
  verify->add_option("--n", n, "degree of the symmetric group")->required();
  verify->add_option("--oracles", oracle_list, "comma list from sfs,lemma,spherical,travis");
  verify->add_flag("--strict", strict, "treat skipped checks as failures");

  auto* classes = app.add_subcommand("classes", "List marked conjugacy classes");
  classes->add_option("--n", n, "degree of the symmetric group")->required();

  auto* character = app.add_subcommand("character", "Classical character value");
  character->add_option("--lam", lam_str, "partition of n")->required();
  character->add_option("--type", type_str, "cycle type as a partition of n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(n, format, out_path);
    if (eval->parsed()) return cmd_eval(lam_str, mu_str, perm_str);
    if (verify->parsed()) return cmd_verify(n, oracle_list, strict);
    if (classes->parsed()) return cmd_classes(n);
    if (character->parsed()) return cmd_character(lam_str, type_str);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
