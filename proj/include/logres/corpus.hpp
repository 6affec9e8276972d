#ifndef LOGRES_CORPUS_HPP
#define LOGRES_CORPUS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logres/criteria.hpp"

namespace logres {

/// A parametrization given as text: source variable names and one image per
/// ambient variable.
struct ParametrizationText {
  std::vector<std::string> vars;
  std::vector<std::string> images;
};

struct CorpusItem {
  std::string name;
  std::vector<std::string> vars;
  std::string poly;
  std::vector<std::string> factors;
  std::optional<ParametrizationText> parametrization;
  /// Expected values keyed like report_fields.
  std::vector<std::pair<std::string, std::string>> expected;
};

/// The bundled examples with their expected verdict table.
const std::vector<CorpusItem>& default_corpus();

/// Flattened view of a report used for corpus assertions: the seven
/// condition verdicts, gorenstein_singular_locus, mu_residues,
/// contains_unit, direct_sum, crosscheck and classification.
std::map<std::string, std::string> report_fields(const DivisorReport& r);

AnalyzeOptions options_for(const DivisorGerm& D, const CorpusItem& item);

struct CorpusOutcome {
  std::string name;
  bool passed = false;
  std::string failure;  // first failing assertion
  std::vector<ConsistencyEntry> consistency;
};

struct CorpusRun {
  std::vector<CorpusOutcome> outcomes;
  bool passed() const;
  /// First failing assertion in corpus order, empty when all pass.
  std::string first_failure() const;
};

/// Runs the items whose name equals `only` (all when empty), in parallel,
/// reporting in corpus order. Throws std::invalid_argument when the filter
/// selects nothing.
CorpusRun run_corpus(const std::vector<CorpusItem>& items, const std::string& only = "");

}  // namespace logres

#endif  // LOGRES_CORPUS_HPP
