// distcomm: entropy decomposition and transmission analysis of
// reference x title-word x group co-occurrence cubes, and journal
// citation-environment delineation.
//
// Exit codes: 0 success, 1 input error, 2 degenerate data.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "distcomm/pipeline.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitDegenerate = 2;

void add_corpus_options(CLI::App& cmd, distcomm::RunConfig& cfg, std::string& unmatched) {
  cmd.add_option("--input", cfg.input, "JSONL corpus")->required();
  cmd.add_option("--stopwords", cfg.stopwords, "stopword file (one word per line)");
  cmd.add_option("--top-words", cfg.top_words, "title-word vocabulary size")->capture_default_str();
  cmd.add_option("--top-refs", cfg.top_refs, "cited-reference vocabulary size")->capture_default_str();
  cmd.add_option("--min-len", cfg.min_len, "minimum title-word length")->capture_default_str();
  cmd.add_option("--unmatched", unmatched, "countries outside a scheme: drop, error or other")
      ->check(CLI::IsMember({"drop", "error", "other"}))
      ->capture_default_str();
}

distcomm::UnmatchedPolicy policy_from(const std::string& s) {
  if (s == "error") return distcomm::UnmatchedPolicy::kError;
  if (s == "other") return distcomm::UnmatchedPolicy::kOtherBucket;
  return distcomm::UnmatchedPolicy::kDrop;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy statistics for distributed scientific communication"};
  app.require_subcommand(1);

  distcomm::RunConfig cfg;
  std::string unmatched = "drop";
  std::string format = "table";
  std::string out_path;

  auto* analyze = app.add_subcommand("analyze", "between-group entropy and transmission per level");
  add_corpus_options(*analyze, cfg, unmatched);
  analyze->add_option("--scheme", cfg.schemes, "grouping scheme file; repeat for several levels")
      ->required();
  analyze->add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();

  auto* cube = app.add_subcommand("cube", "serialize the co-occurrence cube");
  add_corpus_options(*cube, cfg, unmatched);
  cube->add_option("--scheme", cfg.schemes, "grouping scheme file")->required()->expected(1);
  cube->add_option("--out", out_path, "output JSON path (stdout if omitted)");

  auto* delineate = app.add_subcommand("delineate", "citation environment and factor clusters");
  delineate->add_option("--matrix", cfg.matrix, "journal citation matrix CSV")->required();
  delineate->add_option("--seed", cfg.seed, "seed journal")->required();
  delineate->add_option("--threshold", cfg.threshold, "fraction of the seed's citations")
      ->capture_default_str();
  delineate->add_option("--criterion", cfg.criterion, "eigenvalue floor for retained factors")
      ->capture_default_str();
  delineate->add_flag("--varimax", cfg.varimax, "rotate retained factors");
  std::string delineate_format = "json";
  delineate->add_option("--format", delineate_format, "json")->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }
  cfg.unmatched = policy_from(unmatched);

  try {
    if (*analyze) {
      cfg.format = distcomm::parse_output_format(format);
      std::cout << distcomm::render(distcomm::cmd_analyze(cfg), cfg.format);
    } else if (*cube) {
      const auto text = distcomm::cube_to_json(distcomm::cmd_cube(cfg)).dump() + "\n";
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw distcomm::InputError("cannot write '" + out_path + "'");
        out << text;
      }
    } else if (*delineate) {
      std::cout << distcomm::delineation_to_json(distcomm::cmd_delineate(cfg)).dump(2) << '\n';
    }
  } catch (const distcomm::DegenerateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const distcomm::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
