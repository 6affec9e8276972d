#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "logres/corpus.hpp"

using namespace logres;

namespace {

constexpr int kOk = 0;
constexpr int kCorpusFailure = 1;
constexpr int kInvalidInput = 2;
constexpr int kConsistency = 3;

struct RunConfig {
  std::string vars;
  std::string poly;
  std::string factors;
  std::string branches;
  std::string format = "text";
  int precision = 0;
  std::uint64_t seed = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_analyze(const RunConfig& cfg) {
  try {
    auto D = DivisorGerm::parse(split(cfg.vars, ','), cfg.poly);
    AnalyzeOptions opt;
    opt.precision = cfg.precision;
    opt.seed = cfg.seed;
    if (!cfg.factors.empty()) {
      std::vector<Poly> fs;
      for (const auto& f : split(cfg.factors, ';')) fs.push_back(parse(f, D.ring()));
      opt.factors = std::move(fs);
    }
    if (!cfg.branches.empty()) opt.branches = branches_from_json(D, read_file(cfg.branches));
    auto report = analyze(D, opt);
    std::cout << (cfg.format == "json" ? report_to_json(report) + "\n" : report_to_text(report));
    return kOk;
  } catch (const ConsistencyViolation& e) {
    std::cerr << "consistency violation: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }
}

int cmd_corpus(const std::string& only) {
  CorpusRun run;
  try {
    run = run_corpus(default_corpus(), only);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kInvalidInput;
  }
  for (const auto& o : run.outcomes) std::cout << (o.passed ? "ok    " : "FAIL  ") << o.name << "\n";
  if (!run.passed()) {
    std::cerr << "first failure: " << run.first_failure() << "\n";
    return kCorpusFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic residues and normal crossing criteria for hypersurface germs"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one germ h = 0 at the origin");
  analyze_cmd->add_option("--vars", cfg.vars, "Comma-separated variable names")->required();
  analyze_cmd->add_option("--poly", cfg.poly, "Polynomial h")->required();
  analyze_cmd->add_option("--factors", cfg.factors, "Semicolon-separated factorization of h");
  analyze_cmd->add_option("--branches", cfg.branches, "Branch parametrization JSON file");
  analyze_cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--precision", cfg.precision, "Series truncation (0 picks a default)")
      ->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--seed", cfg.seed, "Seed for random choices");

  std::string only;
  auto* corpus_cmd = app.add_subcommand("corpus", "Run the bundled examples against their expected verdicts");
  corpus_cmd->add_option("--only", only, "Run only the named example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }
  if (*analyze_cmd) return cmd_analyze(cfg);
  return cmd_corpus(only);
}
