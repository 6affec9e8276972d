#include "logres/corpus.hpp"

#include <future>
#include <stdexcept>

namespace logres {

namespace {

using Table = std::vector<std::pair<std::string, std::string>>;

// free, euler_homogeneous, jacobian_radical, jacobian_eq_conductor,
// residues_weakly_holomorphic, normal_crossing_codim1, normal_crossing_at_origin
Table verdicts(const char* free, const char* euler, const char* d, const char* g, const char* c, const char* b,
               const char* f) {
  return {{"free", free},
          {"euler_homogeneous", euler},
          {"jacobian_radical", d},
          {"jacobian_eq_conductor", g},
          {"residues_weakly_holomorphic", c},
          {"normal_crossing_codim1", b},
          {"normal_crossing_at_origin", f}};
}

Table operator+(Table a, const Table& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

std::vector<CorpusItem> build_corpus() {
  const char* T = "true";
  const char* F = "false";
  const char* U = "undecided";
  const std::string sqh = to_string(GorensteinClass::suspension_of_quasihomogeneous_plane_curve);
  const std::string na = to_string(GorensteinClass::not_applicable);
  std::vector<CorpusItem> c;
  c.push_back({"node", kXY, "x*y", {"x", "y"}, std::nullopt,
               verdicts(T, T, T, T, T, T, T) + Table{{"gorenstein_singular_locus", "gorenstein"},
                                                     {"direct_sum", T},
                                                     {"crosscheck", "B=true D=true G=true"}}});
  c.push_back({"cusp", kXY, "x^2 - y^3", {}, std::nullopt,
               verdicts(T, T, F, F, F, F, F) + Table{{"gorenstein_singular_locus", "gorenstein"},
                                                     {"mu_residues", "2"},
                                                     {"contains_unit", T},
                                                     {"crosscheck", "B=false D=false G=false"},
                                                     {"classification", sqh}}});
  c.push_back({"triple_point", kXY, "x*y*(x+y)", {"x", "y", "x+y"}, std::nullopt,
               verdicts(T, T, F, F, F, F, F) + Table{{"gorenstein_singular_locus", "gorenstein"},
                                                     {"direct_sum", F},
                                                     {"crosscheck", "B=false D=false G=false"}}});
  c.push_back({"x(x+y)", kXY, "x*(x+y)", {"x", "x+y"}, std::nullopt,
               verdicts(T, T, T, T, T, T, T) + Table{{"gorenstein_singular_locus", "gorenstein"}, {"direct_sum", T}}});
  for (const char* m : {"2", "3"}) {
    std::string g = std::string("x+y^") + m;
    c.push_back({"x(x+y^" + std::string(m) + ")", kXY, "x*(" + g + ")", {"x", g}, std::nullopt,
                 verdicts(T, T, F, F, F, F, F) + Table{{"gorenstein_singular_locus", "gorenstein"}, {"direct_sum", F}}});
  }
  c.push_back({"xyz", kXYZ, "x*y*z", {"x", "y", "z"}, std::nullopt,
               verdicts(T, T, T, T, T, T, T) + Table{{"gorenstein_singular_locus", "not_gorenstein"},
                                                     {"direct_sum", T},
                                                     {"classification", na}}});
  c.push_back({"whitney_umbrella", kXYZ, "x^2 - y^2*z", {}, ParametrizationText{{"s", "t"}, {"s*t", "t", "s^2"}},
               verdicts(F, T, F, U, T, U, F) + Table{{"gorenstein_singular_locus", "undecided"}}});
  c.push_back({"four_planes", kXYZ, "x*y*(x+y)*(x+y*z)", {"x", "y", "x+y", "x+y*z"}, std::nullopt,
               verdicts(T, T, F, F, F, F, F) + Table{{"gorenstein_singular_locus", "not_gorenstein"},
                                                     {"direct_sum", F},
                                                     {"crosscheck", "B=false D=false G=false"}}});
  c.push_back({"non_quasihomogeneous", kXY, "x^4 + y^5 + x*y^4", {}, std::nullopt,
               verdicts(T, F, F, F, F, F, F) + Table{{"gorenstein_singular_locus", "not_gorenstein"},
                                                     {"contains_unit", F}}});
  return c;
}

}  // namespace

const std::vector<CorpusItem>& default_corpus() {
  static const std::vector<CorpusItem> corpus = build_corpus();
  return corpus;
}

std::map<std::string, std::string> report_fields(const DivisorReport& r) {
  std::map<std::string, std::string> out;
  out["free"] = to_string(r.free.verdict);
  out["euler_homogeneous"] = to_string(r.euler_homogeneous.verdict);
  out["jacobian_radical"] = to_string(r.jacobian_radical.verdict);
  out["jacobian_eq_conductor"] = to_string(r.jacobian_eq_conductor.verdict);
  out["residues_weakly_holomorphic"] = to_string(r.residues_weakly_holomorphic.verdict);
  out["normal_crossing_codim1"] = to_string(r.normal_crossing_codim1.verdict);
  out["normal_crossing_at_origin"] = to_string(r.normal_crossing_at_origin.verdict);
  out["gorenstein_singular_locus"] = r.gorenstein_singular_locus;
  out["mu_residues"] = std::to_string(r.mu_residues);
  out["contains_unit"] = r.residues_contain_unit ? "true" : "false";
  out["direct_sum"] = r.direct_sum ? (*r.direct_sum ? "true" : "false") : "none";
  out["crosscheck"] = "B=" + to_string(r.crosscheck.B) + " D=" + to_string(r.crosscheck.D) +
                      " G=" + to_string(r.crosscheck.G);
  out["classification"] = to_string(r.classification.verdict);
  return out;
}

AnalyzeOptions options_for(const DivisorGerm& D, const CorpusItem& item) {
  AnalyzeOptions opt;
  if (!item.factors.empty()) {
    std::vector<Poly> fs;
    for (const auto& f : item.factors) fs.push_back(parse(f, D.ring()));
    opt.factors = std::move(fs);
  }
  if (item.parametrization) {
    Parametrization p{item.parametrization->vars, {}};
    for (const auto& img : item.parametrization->images) p.images.push_back(parse(img, p.params));
    opt.parametrization = std::move(p);
  }
  return opt;
}

namespace {

CorpusOutcome run_item(const CorpusItem& item) {
  CorpusOutcome out;
  out.name = item.name;
  try {
    auto D = DivisorGerm::parse(item.vars, item.poly);
    auto report = analyze(D, options_for(D, item));
    out.consistency = report.consistency;
    auto fields = report_fields(report);
    for (const auto& [key, want] : item.expected) {
      auto it = fields.find(key);
      if (it == fields.end()) {
        out.failure = item.name + ": unknown field " + key;
        return out;
      }
      if (it->second != want) {
        out.failure = item.name + ": " + key + " expected " + want + ", got " + it->second;
        return out;
      }
    }
    out.passed = true;
  } catch (const std::exception& e) {
    out.failure = item.name + ": " + e.what();
  }
  return out;
}

}  // namespace

bool CorpusRun::passed() const {
  for (const auto& o : outcomes)
    if (!o.passed) return false;
  return true;
}

std::string CorpusRun::first_failure() const {
  for (const auto& o : outcomes)
    if (!o.passed) return o.failure;
  return {};
}

CorpusRun run_corpus(const std::vector<CorpusItem>& items, const std::string& only) {
  std::vector<const CorpusItem*> selected;
  for (const auto& item : items)
    if (only.empty() || item.name == only) selected.push_back(&item);
  if (selected.empty()) throw std::invalid_argument("no corpus item named '" + only + "'");
  std::vector<std::future<CorpusOutcome>> jobs;
  for (const CorpusItem* item : selected) jobs.push_back(std::async(std::launch::async, run_item, std::cref(*item)));
  CorpusRun run;
  for (auto& j : jobs) run.outcomes.push_back(j.get());
  return run;
}

}  // namespace logres
